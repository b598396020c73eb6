#include "common.hpp"
#include "registry.hpp"

namespace ppx::rules_detail {
namespace {

using maxcocktails::AddEdge;
using maxcocktails::EdgeGameState;

class MaxCocktailsRules final : public PuzzleRules {
 public:
  PuzzleId puzzle() const override { return PuzzleId::MaxMaximalCocktails; }

  Payload generate(const PuzzleTemplate& tmpl) const override {
    require_positive_params(tmpl, {"num_nodes"});
    const auto n = tmpl.param("num_nodes");
    if (n > 16) fail(ErrorCode::InvalidTemplate, "MaxMaximalCocktails supports at most 16 nodes");
    return maxcocktails::start(static_cast<int>(n), tmpl.has_flag("strict-increase"));
  }

  MoveList legal_moves(const GameState& state) const override {
    const EdgeGameState& game = state.as<EdgeGameState>();
    MoveList list;
    for (int u = 1; u <= game.graph.n; ++u) {
      for (int v = u + 1; v <= game.graph.n; ++v) {
        if (game.graph.has_edge(u, v)) continue;
        if (maxcocktails::check_edge(game, {u, v}).legal) list.moves.emplace_back(AddEdge{u, v});
      }
    }
    return list;
  }

  Feedback apply(GameState& state, const Move& move) const override {
    EdgeGameState& game = state.as<EdgeGameState>();
    AddEdge edge = std::get<AddEdge>(move);
    if (edge.u > edge.v) std::swap(edge.u, edge.v);
    maxcocktails::EdgeCheck check;
    try {
      check = maxcocktails::check_edge(game, edge);
    } catch (const Error& e) {
      return illegal(e.what());
    }
    if (!check.legal) {
      Feedback fb = illegal("count would fall from " + std::to_string(game.count) + " to " +
                            std::to_string(check.new_count));
      if (game.strict_increase && check.new_count == game.count) {
        fb.reason = "count would not increase from " + std::to_string(game.count);
      }
      fb.revealed = {{"count", check.new_count}};
      return fb;
    }
    maxcocktails::add_edge(game, edge, check.new_count);
    return legal({{"count", game.count}});
  }

  std::string observe(const GameState& state, Player viewer) const override {
    const EdgeGameState& game = state.as<EdgeGameState>();
    std::string out = header(state, viewer);
    std::vector<int> nodes;
    for (int i = 1; i <= game.graph.n; ++i) nodes.push_back(i);
    out += "nodes " + int_list(nodes) + '\n';
    out += "edges [";
    for (std::size_t i = 0; i < game.graph.edges.size(); ++i) {
      if (i) out += ", ";
      out += "(" + std::to_string(game.graph.edges[i].first) + ", " + std::to_string(game.graph.edges[i].second) + ")";
    }
    out += "]\n";
    out += "count " + std::to_string(game.count) + '\n';
    out += std::string("rule ") + (game.strict_increase ? "increase" : "non-decrease") + '\n';
    return out;
  }

  nlohmann::json snapshot(const GameState& state) const override {
    const EdgeGameState& game = state.as<EdgeGameState>();
    return {{"n", game.graph.n}, {"edges", game.graph.edges}, {"count", game.count},
            {"strict_increase", game.strict_increase}};
  }

  std::optional<Move> parse_move(std::string_view text) const override {
    static const std::regex re(R"(edge\s+(\d+)\s+(\d+))");
    auto m = match(trim(text), re);
    if (!m) return std::nullopt;
    auto u = to_int((*m)[1]), v = to_int((*m)[2]);
    if (!u || !v || *u > 1000 || *v > 1000) return std::nullopt;
    return AddEdge{static_cast<int>(*u), static_cast<int>(*v)};
  }

  std::string format_move(const Move& move) const override {
    const auto& e = std::get<AddEdge>(move);
    return "edge " + std::to_string(e.u) + " " + std::to_string(e.v);
  }

  std::string move_grammar() const override { return "edge <u> <v>"; }
};

}  // namespace

const PuzzleRules& max_cocktails_rules() {
  static const MaxCocktailsRules rules;
  return rules;
}

}  // namespace ppx::rules_detail
