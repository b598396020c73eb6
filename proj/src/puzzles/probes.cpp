#include "ppx/puzzles/probes.hpp"

#include <algorithm>

#include "ppx/core/errors.hpp"

namespace ppx::probes {

ProbePublic public_view(const ProbeWorld& world) {
  return {world.d, world.k, world.num_particles, world.probes_used, world.found, world.history};
}

bool answer(ProbeWorld& world, const std::vector<int>& pos) {
  return answer(world, hypercube::from_coords(pos, world.d));
}

bool answer(ProbeWorld& world, Vertex pos) {
  if (pos >= (Vertex{1} << world.d)) fail(ErrorCode::DimensionMismatch, "position outside the cube");
  const bool yes = std::binary_search(world.hidden.begin(), world.hidden.end(), pos);
  ++world.probes_used;
  world.history.push_back({pos, yes});
  if (yes && !std::binary_search(world.found.begin(), world.found.end(), pos)) {
    world.found.insert(std::upper_bound(world.found.begin(), world.found.end(), pos), pos);
  }
  return yes;
}

int score(const ProbeWorld& world) {
  if (!world.all_found()) fail(ErrorCode::GameUnfinished, "particles remain unlocated");
  return world.probes_used;
}

ProbeWorld generate(int d, int k, int num_particles, CounterRng& rng) {
  if (d < 1 || d > hypercube::kMaxDimension) fail(ErrorCode::InvalidTemplate, "dimension out of range");
  if (num_particles > (1 << d)) fail(ErrorCode::InvalidTemplate, "more particles than positions");
  ProbeWorld world;
  world.d = d;
  world.k = k;
  world.num_particles = num_particles;
  const std::uint64_t cells = std::uint64_t{1} << d;
  for (int attempt = 0; attempt < 200000; ++attempt) {
    std::vector<Vertex> picked;
    bool ok = true;
    while (ok && static_cast<int>(picked.size()) < num_particles) {
      auto v = static_cast<Vertex>(rng.below(cells));
      if (std::find(picked.begin(), picked.end(), v) != picked.end()) continue;
      ok = hypercube::far_from_all(v, picked, k);
      picked.push_back(v);
    }
    if (ok) {
      std::sort(picked.begin(), picked.end());
      world.hidden = std::move(picked);
      return world;
    }
  }
  fail(ErrorCode::InvalidTemplate, "no particle configuration satisfies the distance constraint");
}

namespace {

void extend(int d, int k, int remaining, Vertex from, std::vector<Vertex>& current,
            std::vector<std::vector<Vertex>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  const Vertex limit = Vertex{1} << d;
  for (Vertex v = from; v < limit; ++v) {
    if (!hypercube::far_from_all(v, current, k)) continue;
    current.push_back(v);
    extend(d, k, remaining - 1, v + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Vertex>> all_configurations(int d, int k, int num_particles) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> current;
  extend(d, k, num_particles, 0, current, out);
  return out;
}

bool consistent(const std::vector<Vertex>& config, const std::vector<ProbeRecord>& history) {
  for (const ProbeRecord& r : history) {
    const bool present = std::find(config.begin(), config.end(), r.position) != config.end();
    if (present != r.yes) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> consistent_configurations(const ProbePublic& view) {
  auto all = all_configurations(view.d, view.k, view.num_particles);
  std::erase_if(all, [&](const auto& c) { return !consistent(c, view.history); });
  return all;
}

}  // namespace ppx::probes
