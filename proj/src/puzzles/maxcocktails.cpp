#include "ppx/puzzles/maxcocktails.hpp"

#include <algorithm>

#include "ppx/core/errors.hpp"

namespace ppx::maxcocktails {

EdgeGameState start(int n, bool strict_increase) {
  EdgeGameState state;
  state.graph = cocktails::make_graph(n, {});
  state.count = 1;
  state.strict_increase = strict_increase;
  return state;
}

EdgeCheck check_edge(const EdgeGameState& state, AddEdge edge) {
  const int n = state.graph.n;
  if (edge.u == edge.v) fail(ErrorCode::SelfLoop, "self-loop at node " + std::to_string(edge.u));
  if (edge.u < 1 || edge.v < 1 || edge.u > n || edge.v > n) {
    fail(ErrorCode::IndexOutOfRange, "edge names an unknown node");
  }
  if (state.graph.has_edge(edge.u, edge.v)) {
    fail(ErrorCode::DuplicateEdge, "edge (" + std::to_string(edge.u) + ", " + std::to_string(edge.v) + ") already present");
  }
  auto adj = state.graph.adjacency();
  adj[static_cast<std::size_t>(edge.u - 1)] |= 1u << (edge.v - 1);
  adj[static_cast<std::size_t>(edge.v - 1)] |= 1u << (edge.u - 1);
  EdgeCheck check;
  check.new_count = cocktails::count_maximal(adj);
  check.legal = state.strict_increase ? check.new_count > state.count : check.new_count >= state.count;
  return check;
}

void add_edge(EdgeGameState& state, AddEdge edge, std::uint64_t new_count) {
  auto edges = state.graph.edges;
  edges.emplace_back(edge.u, edge.v);
  state.graph = cocktails::make_graph(state.graph.n, std::move(edges));
  state.count = new_count;
}

}  // namespace ppx::maxcocktails
