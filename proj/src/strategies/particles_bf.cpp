#include <string>
#include <unordered_map>

#include "ppx/core/errors.hpp"
#include "ppx/strategies/solvers.hpp"

namespace ppx::strategies {

namespace {

// The game only depends on which vertices are still placeable, so the
// search runs on that set.
class ParticleSearch {
 public:
  ParticleSearch(int d, int k) : k_(k), cells_(std::size_t{1} << d) {}

  std::string region_of(const particles::ParticleSpace& space) const {
    std::string region(cells_, '0');
    for (std::size_t v = 0; v < cells_; ++v) {
      if (particles::placement_legal(space, static_cast<particles::Vertex>(v))) region[v] = '1';
    }
    return region;
  }

  std::string after(const std::string& region, std::size_t v) const {
    std::string next = region;
    for (std::size_t u = 0; u < cells_; ++u) {
      if (next[u] == '1' && hypercube::hamming(static_cast<hypercube::Vertex>(u), static_cast<hypercube::Vertex>(v)) < k_) {
        next[u] = '0';
      }
    }
    return next;
  }

  bool wins(const std::string& region) {
    if (auto it = memo_.find(region); it != memo_.end()) return it->second;
    bool win = false;
    for (std::size_t v = 0; v < cells_ && !win; ++v) {
      if (region[v] == '1' && !wins(after(region, v))) win = true;
    }
    memo_.emplace(region, win);
    return win;
  }

 private:
  int k_;
  std::size_t cells_;
  std::unordered_map<std::string, bool> memo_;
};

void check_cap(const particles::ParticleSpace& space) {
  if (space.d > 12) fail(ErrorCode::CapExceeded, "brute force supports d <= 12");
}

}  // namespace

bool particles_first_player_wins(const particles::ParticleSpace& space) {
  check_cap(space);
  ParticleSearch search(space.d, space.k);
  return search.wins(search.region_of(space));
}

particles::Vertex particles_bruteforce(const particles::ParticleSpace& space) {
  check_cap(space);
  ParticleSearch search(space.d, space.k);
  const std::string region = search.region_of(space);
  std::optional<particles::Vertex> first;
  for (std::size_t v = 0; v < region.size(); ++v) {
    if (region[v] != '1') continue;
    if (!first) first = static_cast<particles::Vertex>(v);
    if (!search.wins(search.after(region, v))) return static_cast<particles::Vertex>(v);
  }
  if (!first) fail(ErrorCode::NoLegalMoves, "no legal placement");
  return *first;
}

}  // namespace ppx::strategies
