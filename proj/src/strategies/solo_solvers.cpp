#include <algorithm>
#include <cmath>
#include <numeric>

#include "ppx/core/errors.hpp"
#include "ppx/strategies/solvers.hpp"

namespace ppx::strategies {

std::vector<tidytower::Rotation> tidytower_solve(const std::vector<tidytower::Color>& colors) {
  if (colors.size() > 14) fail(ErrorCode::CapExceeded, "tower longer than 14 cubes");
  return tidytower::minimal_solution(colors);
}

std::vector<int> touring_sa(std::span<const touring::Site> sites, const SAParams& params,
                            CounterRng& rng) {
  const int n = static_cast<int>(sites.size());
  if (n == 0) return {};
  if (params.cooling <= 0.0 || params.cooling >= 1.0 || params.iterations < 1) {
    fail(ErrorCode::ConfigError, "cooling must lie in (0,1) and iterations must be positive");
  }
  double mean_value = 0.0;
  for (const auto& s : sites) mean_value += s.value;
  mean_value /= n;

  std::vector<int> current;
  double current_score = 0.0;
  std::vector<int> best = current;
  double best_score = current_score;
  double temperature = std::max(params.t0_factor * mean_value, 1e-9);

  for (int it = 0; it < params.iterations; ++it) {
    std::vector<int> cand = current;
    const int size = static_cast<int>(cand.size());
    std::vector<int> unused;
    for (int s = 0; s < n; ++s) {
      if (std::find(cand.begin(), cand.end(), s) == cand.end()) unused.push_back(s);
    }
    const auto kind = rng.below(5);
    if ((kind == 0 || size == 0) && !unused.empty()) {
      // add
      const int site = rng.pick(unused);
      cand.insert(cand.begin() + static_cast<std::ptrdiff_t>(rng.below(static_cast<std::uint64_t>(size) + 1)), site);
    } else if (kind == 1 && size > 0) {
      // remove
      cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(rng.below(static_cast<std::uint64_t>(size))));
    } else if (kind == 2 && size >= 2) {
      // swap
      auto i = rng.below(static_cast<std::uint64_t>(size));
      auto j = rng.below(static_cast<std::uint64_t>(size));
      std::swap(cand[i], cand[j]);
    } else if (kind == 3 && size >= 2) {
      // insert: move one site elsewhere
      auto i = static_cast<std::ptrdiff_t>(rng.below(static_cast<std::uint64_t>(size)));
      const int site = cand[static_cast<std::size_t>(i)];
      cand.erase(cand.begin() + i);
      cand.insert(cand.begin() + static_cast<std::ptrdiff_t>(rng.below(static_cast<std::uint64_t>(size))), site);
    } else if (kind == 4 && size >= 2) {
      // 2-opt: reverse a segment
      auto i = static_cast<std::ptrdiff_t>(rng.below(static_cast<std::uint64_t>(size)));
      auto j = static_cast<std::ptrdiff_t>(rng.below(static_cast<std::uint64_t>(size)));
      if (i > j) std::swap(i, j);
      std::reverse(cand.begin() + i, cand.begin() + j + 1);
    } else if (!unused.empty() && size > 0) {
      // replace
      cand[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(size)))] = rng.pick(unused);
    }
    const double score = touring::tour_score(sites, cand);
    const double delta = score - current_score;
    if (delta >= 0.0 || rng.unit() < std::exp(delta / temperature)) {
      current = std::move(cand);
      current_score = score;
      if (current_score > best_score) {
        best_score = current_score;
        best = current;
      }
    }
    temperature *= params.cooling;
    if (temperature < 1e-12) temperature = 1e-12;
  }
  return best;
}

cocktails::Family mis_bruteforce(const cocktails::Graph& graph) {
  if (graph.n > 16) fail(ErrorCode::CapExceeded, "brute force supports at most 16 nodes");
  const auto adj = graph.adjacency();
  const std::uint32_t limit = 1u << graph.n;
  cocktails::Family family;
  for (std::uint32_t s = 0; s < limit; ++s) {
    bool independent = true;
    for (int v = 0; v < graph.n && independent; ++v) {
      if ((s >> v & 1u) && (adj[static_cast<std::size_t>(v)] & s)) independent = false;
    }
    if (!independent) continue;
    bool maximal = true;
    for (int v = 0; v < graph.n && maximal; ++v) {
      if (!(s >> v & 1u) && !(adj[static_cast<std::size_t>(v)] & s)) maximal = false;
    }
    if (!maximal) continue;
    cocktails::NodeSet nodes;
    for (int v = 0; v < graph.n; ++v) {
      if (s >> v & 1u) nodes.push_back(v + 1);
    }
    family.push_back(std::move(nodes));
  }
  std::sort(family.begin(), family.end());
  return family;
}

EdgeGameSolver::EdgeGameSolver(int n, bool strict_increase) : n_(n), strict_(strict_increase) {
  if (n > 8) fail(ErrorCode::CapExceeded, "edge game solver supports at most 8 nodes");
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) pairs_.emplace_back(u, v);
  }
}

std::uint32_t EdgeGameSolver::mask_of(const cocktails::Graph& graph) const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (graph.has_edge(pairs_[i].first, pairs_[i].second)) mask |= 1u << i;
  }
  return mask;
}

std::uint64_t EdgeGameSolver::count(std::uint32_t edge_mask) {
  if (auto it = counts_.find(edge_mask); it != counts_.end()) return it->second;
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n_), 0);
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (!(edge_mask >> i & 1u)) continue;
    auto [u, v] = pairs_[i];
    adj[static_cast<std::size_t>(u - 1)] |= 1u << (v - 1);
    adj[static_cast<std::size_t>(v - 1)] |= 1u << (u - 1);
  }
  const std::uint64_t c = cocktails::count_maximal(adj);
  counts_.emplace(edge_mask, c);
  return c;
}

bool EdgeGameSolver::wins(std::uint32_t edge_mask) {
  if (auto it = wins_.find(edge_mask); it != wins_.end()) return it->second;
  const std::uint64_t now = count(edge_mask);
  bool win = false;
  for (std::size_t i = 0; i < pairs_.size() && !win; ++i) {
    if (edge_mask >> i & 1u) continue;
    const std::uint32_t next = edge_mask | (1u << i);
    const std::uint64_t c = count(next);
    const bool legal = strict_ ? c > now : c >= now;
    if (legal && !wins(next)) win = true;
  }
  wins_.emplace(edge_mask, win);
  return win;
}

std::optional<maxcocktails::AddEdge> EdgeGameSolver::best_edge(const cocktails::Graph& graph) {
  const std::uint32_t mask = mask_of(graph);
  const std::uint64_t now = count(mask);
  std::optional<maxcocktails::AddEdge> first;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (mask >> i & 1u) continue;
    const std::uint32_t next = mask | (1u << i);
    const std::uint64_t c = count(next);
    if (strict_ ? c <= now : c < now) continue;
    maxcocktails::AddEdge edge{pairs_[i].first, pairs_[i].second};
    if (!first) first = edge;
    if (!wins(next)) return edge;
  }
  return first;
}

}  // namespace ppx::strategies
