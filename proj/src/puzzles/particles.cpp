#include "ppx/puzzles/particles.hpp"

#include <algorithm>

namespace ppx::particles {

bool placement_legal(const ParticleSpace& space, const std::vector<int>& pos) {
  return placement_legal(space, hypercube::from_coords(pos, space.d));
}

bool placement_legal(const ParticleSpace& space, Vertex v) {
  if (v >= (Vertex{1} << space.d)) return false;
  if (std::find(space.placed.begin(), space.placed.end(), v) != space.placed.end()) return false;
  return hypercube::far_from_all(v, space.placed, space.k);
}

std::vector<Vertex> legal_placements(const ParticleSpace& space) {
  std::vector<Vertex> moves;
  const Vertex limit = Vertex{1} << space.d;
  for (Vertex v = 0; v < limit; ++v) {
    if (placement_legal(space, v)) moves.push_back(v);
  }
  return moves;
}

long long packing_bound(int d, int k) {
  const int radius = (k - 1) / 2;
  long long ball = 0;
  long long binom = 1;
  for (int i = 0; i <= radius && i <= d; ++i) {
    ball += binom;
    binom = binom * (d - i) / (i + 1);
  }
  return (1LL << d) / ball;
}

}  // namespace ppx::particles
