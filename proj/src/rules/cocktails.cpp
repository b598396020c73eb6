#include <algorithm>

#include "common.hpp"
#include "registry.hpp"

namespace ppx::rules_detail {
namespace {

using cocktails::Answer;
using cocktails::CocktailGame;

std::string edge_list(const cocktails::Graph& g) {
  std::string out = "[";
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i) out += ", ";
    out += "(" + std::to_string(g.edges[i].first) + ", " + std::to_string(g.edges[i].second) + ")";
  }
  return out + "]";
}

std::string node_list(int n) {
  std::vector<int> nodes;
  for (int i = 1; i <= n; ++i) nodes.push_back(i);
  return int_list(nodes);
}

class CountCocktailsRules final : public PuzzleRules {
 public:
  PuzzleId puzzle() const override { return PuzzleId::CountMaximalCocktails; }

  Payload generate(const PuzzleTemplate& tmpl) const override {
    require_positive_params(tmpl, {"num_nodes", "edge_percent"});
    const auto n = tmpl.param("num_nodes");
    if (n > cocktails::kDefaultCap) fail(ErrorCode::InvalidTemplate, "too many nodes");
    auto rng = tmpl.rng("graph");
    CocktailGame game;
    game.graph = cocktails::random_graph(static_cast<int>(n), static_cast<int>(tmpl.param("edge_percent")), rng);
    game.mode = tmpl.difficulty == Difficulty::Easy ? cocktails::AnswerMode::CountOnly
                                                    : cocktails::AnswerMode::FullList;
    return game;
  }

  // The answer space is unbounded; Easy lists counts up to the
  // Moon-Moser bound, Normal lists nothing.
  MoveList legal_moves(const GameState& state) const override {
    const CocktailGame& game = state.as<CocktailGame>();
    MoveList list;
    list.truncated = true;
    if (game.mode == cocktails::AnswerMode::CountOnly) {
      const int n = game.graph.n;
      std::uint64_t bound = 1;
      int rest = n;
      while (rest > 4 || rest == 3) {
        bound *= 3;
        rest -= 3;
      }
      if (rest == 4) bound *= 4;
      if (rest == 2) bound *= 2;
      for (std::uint64_t c = 0; c <= bound; ++c) list.moves.emplace_back(Answer{c, std::nullopt});
    }
    return list;
  }

  Feedback apply(GameState& state, const Move& move) const override {
    CocktailGame& game = state.as<CocktailGame>();
    const auto& answer = std::get<Answer>(move);
    int score = 0;
    try {
      score = cocktails::score_answer(game.graph, game.mode, answer);
    } catch (const Error& e) {
      return malformed(e.what());
    }
    game.submitted = answer;
    game.score = score;
    return finish(legal({{"correct", score == 1}}), Outcome::solo(score));
  }

  std::string observe(const GameState& state, Player viewer) const override {
    const CocktailGame& game = state.as<CocktailGame>();
    std::string out = header(state, viewer);
    out += "mode " + std::string(game.mode == cocktails::AnswerMode::CountOnly ? "count" : "list") + '\n';
    out += "nodes " + node_list(game.graph.n) + '\n';
    out += "edges " + edge_list(game.graph) + '\n';
    return out;
  }

  nlohmann::json snapshot(const GameState& state) const override {
    const CocktailGame& game = state.as<CocktailGame>();
    nlohmann::json j = {{"n", game.graph.n},
                        {"edges", game.graph.edges},
                        {"mode", game.mode == cocktails::AnswerMode::CountOnly ? "count" : "list"},
                        {"score", game.score ? nlohmann::json(*game.score) : nlohmann::json(nullptr)}};
    j["submitted"] = game.submitted ? nlohmann::json(format_move(*game.submitted)) : nlohmann::json(nullptr);
    return j;
  }

  std::optional<Move> parse_move(std::string_view text) const override {
    const std::string t = trim(text);
    static const std::regex count_re(R"(count\s+(\d+))");
    if (auto m = match(t, count_re)) {
      auto v = to_int((*m)[1]);
      if (!v) return std::nullopt;
      return Answer{static_cast<std::uint64_t>(*v), std::nullopt};
    }
    static const std::regex sets_re(R"(sets((\s+\[[^\[\]]*\])*))");
    auto m = match(t, sets_re);
    if (!m) return std::nullopt;
    const std::string body = (*m)[1];
    static const std::regex set_re(R"(\[[^\[\]]*\])");
    cocktails::Family family;
    for (auto it = std::sregex_iterator(body.begin(), body.end(), set_re); it != std::sregex_iterator(); ++it) {
      auto values = parse_int_list(it->str());
      if (!values) return std::nullopt;
      family.push_back(*values);
    }
    return Answer{std::nullopt, family};
  }

  std::string format_move(const Move& move) const override {
    const auto& a = std::get<Answer>(move);
    if (a.count) return "count " + std::to_string(*a.count);
    std::string out = "sets";
    if (a.family) {
      for (const auto& s : *a.family) out += ' ' + int_list(s);
    }
    return out;
  }

  std::string move_grammar() const override {
    return "count <n>   (Easy) | sets [a, b, ...] [c, ...] ...   (Normal)";
  }
};

}  // namespace

const PuzzleRules& count_cocktails_rules() {
  static const CountCocktailsRules rules;
  return rules;
}

}  // namespace ppx::rules_detail
