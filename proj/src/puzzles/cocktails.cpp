#include "ppx/puzzles/cocktails.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "ppx/core/errors.hpp"

namespace ppx::cocktails {

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::pair{u, v});
}

std::vector<std::uint32_t> Graph::adjacency() const {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u - 1)] |= 1u << (v - 1);
    adj[static_cast<std::size_t>(v - 1)] |= 1u << (u - 1);
  }
  return adj;
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0 || n > 32) fail(ErrorCode::CapExceeded, "graph supports at most 32 nodes");
  for (auto& [u, v] : edges) {
    if (u == v) fail(ErrorCode::SelfLoop, "self-loop at node " + std::to_string(u));
    if (u < 1 || v < 1 || u > n || v > n) {
      fail(ErrorCode::IndexOutOfRange, "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") names an unknown node");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    fail(ErrorCode::DuplicateEdge, "duplicate edge (" + std::to_string(dup->first) + ", " +
                                       std::to_string(dup->second) + ")");
  }
  return Graph{n, std::move(edges)};
}

namespace {

// Bron-Kerbosch with Tomita pivoting on the complement: cliques of the
// complement are independent sets of the graph.
template <class Emit>
void bron_kerbosch(const std::vector<std::uint32_t>& comp, std::uint32_t r, std::uint32_t p,
                   std::uint32_t x, Emit& emit) {
  if (p == 0) {
    if (x == 0) emit(r);
    return;
  }
  std::uint32_t px = p | x;
  int pivot = std::countr_zero(px);
  std::size_t best = 0;
  for (std::uint32_t m = px; m; m &= m - 1) {
    int u = std::countr_zero(m);
    auto c = static_cast<std::size_t>(std::popcount(p & comp[static_cast<std::size_t>(u)]));
    if (c > best || (c == best && u < pivot)) {
      best = c;
      pivot = u;
    }
  }
  for (std::uint32_t m = p & ~comp[static_cast<std::size_t>(pivot)]; m; m &= m - 1) {
    int v = std::countr_zero(m);
    std::uint32_t bit = 1u << v;
    const std::uint32_t nv = comp[static_cast<std::size_t>(v)];
    bron_kerbosch(comp, r | bit, p & nv, x & nv, emit);
    p &= ~bit;
    x |= bit;
  }
}

std::vector<std::uint32_t> complement(const std::vector<std::uint32_t>& adj) {
  const auto n = adj.size();
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<std::uint32_t> comp(n);
  for (std::size_t i = 0; i < n; ++i) comp[i] = all & ~adj[i] & ~(1u << i);
  return comp;
}

std::uint32_t full_mask(std::size_t n) { return n == 32 ? ~0u : (1u << n) - 1; }

}  // namespace

Family enumerate_maximal(const Graph& graph, int cap) {
  if (graph.n > cap) {
    fail(ErrorCode::CapExceeded, "graph has " + std::to_string(graph.n) + " nodes, cap is " + std::to_string(cap));
  }
  const auto comp = complement(graph.adjacency());
  Family family;
  auto emit = [&](std::uint32_t set) {
    NodeSet nodes;
    for (std::uint32_t m = set; m; m &= m - 1) nodes.push_back(std::countr_zero(m) + 1);
    family.push_back(std::move(nodes));
  };
  if (graph.n == 0) {
    family.push_back({});
    return family;
  }
  bron_kerbosch(comp, 0, full_mask(comp.size()), 0, emit);
  std::sort(family.begin(), family.end());
  return family;
}

std::uint64_t count_maximal(const Graph& graph, int cap) {
  if (graph.n > cap) {
    fail(ErrorCode::CapExceeded, "graph has " + std::to_string(graph.n) + " nodes, cap is " + std::to_string(cap));
  }
  return count_maximal(graph.adjacency());
}

std::uint64_t count_maximal(const std::vector<std::uint32_t>& adjacency) {
  if (adjacency.empty()) return 1;
  const auto comp = complement(adjacency);
  std::uint64_t count = 0;
  auto emit = [&](std::uint32_t) { ++count; };
  bron_kerbosch(comp, 0, full_mask(comp.size()), 0, emit);
  return count;
}

Family canonical(Family family) {
  for (auto& set : family) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

int score_answer(const Graph& graph, AnswerMode mode, const Answer& answer) {
  if (mode == AnswerMode::CountOnly) {
    if (!answer.count || answer.family) fail(ErrorCode::MalformedAnswer, "expected a count");
    return *answer.count == count_maximal(graph) ? 1 : 0;
  }
  if (!answer.family || answer.count) fail(ErrorCode::MalformedAnswer, "expected a list of sets");
  for (const auto& set : *answer.family) {
    for (int node : set) {
      if (node < 1 || node > graph.n) fail(ErrorCode::MalformedAnswer, "unknown node " + std::to_string(node));
    }
  }
  return canonical(*answer.family) == enumerate_maximal(graph) ? 1 : 0;
}

Graph random_graph(int n, int edge_percent, CounterRng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (static_cast<int>(rng.below(100)) < edge_percent) edges.emplace_back(u, v);
    }
  }
  return make_graph(n, std::move(edges));
}

}  // namespace ppx::cocktails
