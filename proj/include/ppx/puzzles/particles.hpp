#pragma once

#include <vector>

#include "ppx/puzzles/hypercube.hpp"

namespace ppx::particles {

using hypercube::Vertex;

struct Place {
  std::vector<int> coords;
  bool operator==(const Place&) const = default;
};

struct ParticleSpace {
  int d = 3;
  int k = 2;
  std::vector<Vertex> placed;  // in placement order

  bool operator==(const ParticleSpace&) const = default;
};

// Unoccupied and at Hamming distance >= k from every placed particle.
// Throws DimensionMismatch when pos has the wrong length.
bool placement_legal(const ParticleSpace& space, const std::vector<int>& pos);
bool placement_legal(const ParticleSpace& space, Vertex v);

// Ascending vertex order.
std::vector<Vertex> legal_placements(const ParticleSpace& space);

// Sphere-packing bound floor(2^d / |ball of radius floor((k-1)/2)|).
long long packing_bound(int d, int k);

}  // namespace ppx::particles
