#include "common.hpp"
#include "registry.hpp"

namespace ppx::rules_detail {
namespace {

using bags::BagWorld;
using bags::PickBag;

class BagRules : public PuzzleRules {
 public:
  explicit BagRules(bool two_player) : two_player_(two_player) {}

  PuzzleId puzzle() const override { return two_player_ ? PuzzleId::LargerTarget : PuzzleId::MaxTarget; }

  Payload generate(const PuzzleTemplate& tmpl) const override {
    require_positive_params(tmpl, {"bag_count", "coins_per_bag", "max_guess"});
    auto rng = tmpl.rng("bags");
    return bags::generate(static_cast<int>(tmpl.param("bag_count")),
                          static_cast<int>(tmpl.param("coins_per_bag")),
                          static_cast<int>(tmpl.param("max_guess")), two_player_, rng);
  }

  MoveList legal_moves(const GameState& state) const override {
    const BagWorld& world = state.as<BagWorld>();
    MoveList list;
    if (world.picks_left[static_cast<std::size_t>(seat_index(state.active_player))] <= 0) return list;
    for (int i = 0; i < world.bag_count(); ++i) {
      if (!world.residual[static_cast<std::size_t>(i)].empty()) list.moves.emplace_back(PickBag{i});
    }
    return list;
  }

  Feedback apply(GameState& state, const Move& move) const override {
    BagWorld& world = state.as<BagWorld>();
    const int seat = seat_index(state.active_player);
    int coin = 0;
    try {
      coin = bags::draw(world, std::get<PickBag>(move).index, seat);
    } catch (const Error& e) {
      return illegal(e.what());
    }
    Feedback fb = legal({{"coin", coin}, {"total", world.totals[static_cast<std::size_t>(seat)]}});
    if (world.picks_left[0] == 0 && world.picks_left[1] == 0) {
      return finish(fb, two_player_ ? compare_totals(world.totals[0], world.totals[1])
                                    : Outcome::solo(world.totals[0]));
    }
    return fb;
  }

  Player next_player(const GameState& state) const override {
    if (!two_player_) return Player::Solo;
    const BagWorld& world = state.as<BagWorld>();
    const Player other = opponent(state.active_player);
    return world.picks_left[static_cast<std::size_t>(seat_index(other))] > 0 ? other : state.active_player;
  }

  std::string observe(const GameState& state, Player viewer) const override {
    const BagWorld& world = state.as<BagWorld>();
    std::string out = header(state, viewer);
    out += "bag_count " + std::to_string(world.bag_count()) + '\n';
    out += "contents";
    for (const auto& bag : world.contents) out += ' ' + int_list(bag);
    out += '\n';
    if (two_player_) {
      out += "picks_left " + std::to_string(world.picks_left[0]) + ' ' + std::to_string(world.picks_left[1]) + '\n';
      out += "totals " + std::to_string(world.totals[0]) + ' ' + std::to_string(world.totals[1]) + '\n';
    } else {
      out += "picks_left " + std::to_string(world.picks_left[0]) + '\n';
      out += "total " + std::to_string(world.totals[0]) + '\n';
    }
    out += "draws";
    for (const auto& d : world.log) {
      out += ' ';
      if (two_player_) out += std::string(d.seat == 0 ? "P1" : "P2") + ':';
      out += std::to_string(d.index) + "->" + std::to_string(d.coin);
    }
    return out + '\n';
  }

  nlohmann::json snapshot(const GameState& state) const override {
    const BagWorld& world = state.as<BagWorld>();
    nlohmann::json log = nlohmann::json::array();
    for (const auto& d : world.log) log.push_back({d.seat, d.index, d.coin});
    return {{"contents", world.contents}, {"perm", world.perm}, {"residual", world.residual},
            {"picks_left", world.picks_left}, {"totals", world.totals}, {"log", log},
            {"rng", {world.rng.key(), world.rng.counter()}}};
  }

  std::optional<Move> parse_move(std::string_view text) const override {
    static const std::regex re(R"(pick\s+(\d+))");
    auto m = match(trim(text), re);
    if (!m) return std::nullopt;
    auto v = to_int((*m)[1]);
    if (!v || *v > 1000) return std::nullopt;
    return PickBag{static_cast<int>(*v)};
  }

  std::string format_move(const Move& move) const override {
    return "pick " + std::to_string(std::get<PickBag>(move).index);
  }

  std::string move_grammar() const override { return "pick <bag index>   (0-based)"; }

 private:
  bool two_player_;
};

}  // namespace

const PuzzleRules& max_target_rules() {
  static const BagRules rules(false);
  return rules;
}

const PuzzleRules& larger_target_rules() {
  static const BagRules rules(true);
  return rules;
}

}  // namespace ppx::rules_detail
