#include "common.hpp"
#include "registry.hpp"

namespace ppx::rules_detail {
namespace {

using tidytower::Rotation;
using tidytower::Tower;

class TidyTowerRules final : public PuzzleRules {
 public:
  PuzzleId puzzle() const override { return PuzzleId::TidyTower; }

  Payload generate(const PuzzleTemplate& tmpl) const override {
    require_positive_params(tmpl, {"length"});
    auto rng = tmpl.rng("tower");
    return tidytower::generate(static_cast<int>(tmpl.param("length")), rng);
  }

  MoveList legal_moves(const GameState& state) const override {
    const Tower& tower = state.as<Tower>();
    MoveList list;
    if (tower.moves_used >= tower.budget) return list;
    for (int p = 1; p <= tower.length(); ++p) {
      list.moves.emplace_back(Rotation{p, std::nullopt});
      for (int q = p + 1; q <= tower.length(); ++q) list.moves.emplace_back(Rotation{p, q});
    }
    return list;
  }

  Feedback apply(GameState& state, const Move& move) const override {
    Tower& tower = state.as<Tower>();
    try {
      tower = tidytower::apply(tower, std::get<Rotation>(move));
    } catch (const Error& e) {
      return illegal(e.what());
    }
    nlohmann::json revealed = {{"tower", tidytower::to_string(tower.colors)}};
    if (tidytower::is_solved(tower)) return finish(legal(revealed), Outcome::solo(1.0));
    if (tower.moves_used >= tower.budget) return finish(legal(revealed), Outcome::solo(0.0));
    return legal(revealed);
  }

  std::string observe(const GameState& state, Player viewer) const override {
    const Tower& tower = state.as<Tower>();
    std::string out = header(state, viewer);
    out += "tower " + tidytower::to_string(tower.colors) + '\n';
    out += "moves_used " + std::to_string(tower.moves_used) + '\n';
    out += "budget " + std::to_string(tower.budget) + '\n';
    return out;
  }

  nlohmann::json snapshot(const GameState& state) const override {
    const Tower& tower = state.as<Tower>();
    return {{"tower", tidytower::to_string(tower.colors)},
            {"moves_used", tower.moves_used},
            {"budget", tower.budget}};
  }

  std::optional<Move> parse_move(std::string_view text) const override {
    static const std::regex re(R"(rotate\s+(\d+)(\s+hold\s+(\d+))?)");
    auto m = match(trim(text), re);
    if (!m) return std::nullopt;
    auto p = to_int((*m)[1]);
    if (!p || *p > 1000) return std::nullopt;
    Rotation r{static_cast<int>(*p), std::nullopt};
    if ((*m)[3].matched) {
      auto q = to_int((*m)[3]);
      if (!q || *q > 1000) return std::nullopt;
      r.hold = static_cast<int>(*q);
    }
    return r;
  }

  std::string format_move(const Move& move) const override {
    const auto& r = std::get<Rotation>(move);
    std::string out = "rotate " + std::to_string(r.position);
    if (r.hold) out += " hold " + std::to_string(*r.hold);
    return out;
  }

  std::string move_grammar() const override {
    return "rotate <p> | rotate <p> hold <q>   (1-based, bottom cube is 1, q > p)";
  }
};

}  // namespace

const PuzzleRules& tidytower_rules() {
  static const TidyTowerRules rules;
  return rules;
}

}  // namespace ppx::rules_detail
