#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ppx/core/rng.hpp"

namespace ppx::cocktails {

using NodeSet = std::vector<int>;  // ascending node ids
using Family = std::vector<NodeSet>;

// Undirected graph on nodes 1..n; edges are "bad interactions".
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted

  bool has_edge(int u, int v) const;
  // Bit i-1 set in adjacency(i) for each neighbour i.
  std::vector<std::uint32_t> adjacency() const;
  bool operator==(const Graph&) const = default;
};

inline constexpr int kDefaultCap = 24;

// Rejects self-loops, duplicates and out-of-range endpoints; returns the
// graph with normalized (u < v, sorted) edges.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

// All maximal independent sets, canonically ordered. Bron-Kerbosch with
// pivoting on the complement graph. Throws CapExceeded when n > cap.
Family enumerate_maximal(const Graph& graph, int cap = kDefaultCap);
std::uint64_t count_maximal(const Graph& graph, int cap = kDefaultCap);

// Same count for an adjacency bitmask representation (n <= 32).
std::uint64_t count_maximal(const std::vector<std::uint32_t>& adjacency);

Family canonical(Family family);

enum class AnswerMode { CountOnly, FullList };

struct Answer {
  std::optional<std::uint64_t> count;
  std::optional<Family> family;
  bool operator==(const Answer&) const = default;
};

struct CocktailGame {
  Graph graph;
  AnswerMode mode = AnswerMode::CountOnly;
  std::optional<Answer> submitted;
  std::optional<int> score;
  bool operator==(const CocktailGame&) const = default;
};

// 1 iff the answer is exactly right. Throws MalformedAnswer when the answer
// form does not match the mode or names unknown nodes.
int score_answer(const Graph& graph, AnswerMode mode, const Answer& answer);

// Erdos-Renyi graph with the given edge probability (percent).
Graph random_graph(int n, int edge_percent, CounterRng& rng);

}  // namespace ppx::cocktails
