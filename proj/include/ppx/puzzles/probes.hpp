#pragma once

#include <utility>
#include <vector>

#include "ppx/core/rng.hpp"
#include "ppx/puzzles/hypercube.hpp"

namespace ppx::probes {

using hypercube::Vertex;

struct Probe {
  std::vector<int> coords;
  bool operator==(const Probe&) const = default;
};

struct ProbeRecord {
  Vertex position = 0;
  bool yes = false;
  bool operator==(const ProbeRecord&) const = default;
};

struct ProbeWorld {
  int d = 3;
  int k = 1;
  int num_particles = 2;
  std::vector<Vertex> hidden;  // sorted; never exposed to agents
  int probes_used = 0;
  std::vector<Vertex> found;  // sorted
  std::vector<ProbeRecord> history;

  bool all_found() const { return found.size() == hidden.size(); }
  bool operator==(const ProbeWorld&) const = default;
};

// What an agent may see.
struct ProbePublic {
  int d = 3;
  int k = 1;
  int num_particles = 2;
  int probes_used = 0;
  std::vector<Vertex> found;
  std::vector<ProbeRecord> history;
};

ProbePublic public_view(const ProbeWorld& world);

// Yes iff a particle sits at pos. Every call counts as a probe.
bool answer(ProbeWorld& world, const std::vector<int>& pos);
bool answer(ProbeWorld& world, Vertex pos);

// Probes used; lower is better. Throws GameUnfinished until all are found.
int score(const ProbeWorld& world);

// Uniform over valid configurations by rejection sampling.
// Throws InvalidTemplate if no configuration is found.
ProbeWorld generate(int d, int k, int num_particles, CounterRng& rng);

// All sorted particle sets of the given size, pairwise distance >= k.
std::vector<std::vector<Vertex>> all_configurations(int d, int k, int num_particles);

// Configurations agreeing with every recorded probe answer.
std::vector<std::vector<Vertex>> consistent_configurations(const ProbePublic& view);

bool consistent(const std::vector<Vertex>& config, const std::vector<ProbeRecord>& history);

}  // namespace ppx::probes
