#pragma once

#include <cstdint>

#include "ppx/puzzles/cocktails.hpp"

namespace ppx::maxcocktails {

struct AddEdge {
  int u = 0;
  int v = 0;
  bool operator==(const AddEdge&) const = default;
};

struct EdgeGameState {
  cocktails::Graph graph;
  std::uint64_t count = 1;  // cached maximal-cocktail count of graph
  bool strict_increase = false;

  bool operator==(const EdgeGameState&) const = default;
};

struct EdgeCheck {
  bool legal = false;
  std::uint64_t new_count = 0;
};

EdgeGameState start(int n, bool strict_increase = false);

// Recount with the edge added. Legal iff the count does not decrease (or,
// with strict_increase, strictly increases). Throws SelfLoop, DuplicateEdge
// or IndexOutOfRange.
EdgeCheck check_edge(const EdgeGameState& state, AddEdge edge);

// Adds the edge and refreshes the cached count.
void add_edge(EdgeGameState& state, AddEdge edge, std::uint64_t new_count);

}  // namespace ppx::maxcocktails
