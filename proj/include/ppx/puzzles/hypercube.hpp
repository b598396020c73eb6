#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace ppx::hypercube {

// Vertex of the d-cube stored as a bitmask; coordinate i is bit i.
using Vertex = std::uint32_t;

inline constexpr int kMaxDimension = 20;

inline int hamming(Vertex a, Vertex b) { return std::popcount(a ^ b); }

// Throws DimensionMismatch when coords.size() != d, InvalidMove when a
// coordinate is not 0/1.
Vertex from_coords(const std::vector<int>& coords, int d);
std::vector<int> to_coords(Vertex v, int d);

// "[0, 1, 1]" rendering used in observations and move text.
std::string format(Vertex v, int d);

bool far_from_all(Vertex v, const std::vector<Vertex>& others, int k);

}  // namespace ppx::hypercube
