#include "ppx/puzzles/hypercube.hpp"

#include "ppx/core/errors.hpp"

namespace ppx::hypercube {

Vertex from_coords(const std::vector<int>& coords, int d) {
  if (static_cast<int>(coords.size()) != d) {
    fail(ErrorCode::DimensionMismatch, "expected " + std::to_string(d) + " coordinates, got " +
                                           std::to_string(coords.size()));
  }
  Vertex v = 0;
  for (int i = 0; i < d; ++i) {
    const int c = coords[static_cast<std::size_t>(i)];
    if (c != 0 && c != 1) fail(ErrorCode::InvalidMove, "coordinates must be 0 or 1");
    if (c) v |= Vertex{1} << i;
  }
  return v;
}

std::vector<int> to_coords(Vertex v, int d) {
  std::vector<int> coords(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) coords[static_cast<std::size_t>(i)] = static_cast<int>((v >> i) & 1u);
  return coords;
}

std::string format(Vertex v, int d) {
  std::string out = "[";
  for (int i = 0; i < d; ++i) {
    if (i) out += ", ";
    out += ((v >> i) & 1u) ? '1' : '0';
  }
  return out + "]";
}

bool far_from_all(Vertex v, const std::vector<Vertex>& others, int k) {
  for (Vertex o : others) {
    if (hamming(v, o) < k) return false;
  }
  return true;
}

}  // namespace ppx::hypercube
