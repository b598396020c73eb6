#include <algorithm>

#include "common.hpp"
#include "registry.hpp"

namespace ppx::rules_detail {
namespace {

using cardnim::NimState;
using cardnim::PlayCard;

class CardNimRules final : public PuzzleRules {
 public:
  PuzzleId puzzle() const override { return PuzzleId::CardNim; }

  Payload generate(const PuzzleTemplate& tmpl) const override {
    require_positive_params(tmpl, {"num_cards", "max_card", "max_stones"});
    auto rng = tmpl.rng("deal");
    return cardnim::generate(tmpl.difficulty == Difficulty::Easy,
                             static_cast<int>(tmpl.param("num_cards")),
                             static_cast<int>(tmpl.param("max_card")),
                             static_cast<int>(tmpl.param("max_stones")), rng);
  }

  MoveList legal_moves(const GameState& state) const override {
    auto cards = cardnim::legal_cards(state.as<NimState>(), seat_index(state.active_player));
    cards.erase(std::unique(cards.begin(), cards.end()), cards.end());
    MoveList list;
    for (int v : cards) list.moves.emplace_back(PlayCard{v});
    return list;
  }

  Feedback apply(GameState& state, const Move& move) const override {
    NimState& nim = state.as<NimState>();
    try {
      cardnim::play(nim, seat_index(state.active_player), std::get<PlayCard>(move).value);
    } catch (const Error& e) {
      return illegal(e.what());
    }
    Feedback fb = legal({{"stones", nim.stones}});
    if (nim.stones == 0) return finish(fb, Outcome::win(state.active_player));
    return fb;
  }

  std::string observe(const GameState& state, Player viewer) const override {
    const NimState& nim = state.as<NimState>();
    std::string out = header(state, viewer);
    out += "stones " + std::to_string(nim.stones) + '\n';
    out += "hand_P1 " + int_list(nim.hands[0]) + '\n';
    out += "hand_P2 " + int_list(nim.hands[1]) + '\n';
    return out;
  }

  nlohmann::json snapshot(const GameState& state) const override {
    const NimState& nim = state.as<NimState>();
    return {{"stones", nim.stones}, {"hands", nim.hands}, {"initial_stones", nim.initial_stones}};
  }

  std::optional<Move> parse_move(std::string_view text) const override {
    static const std::regex re(R"(play\s+(\d+))");
    auto m = match(trim(text), re);
    if (!m) return std::nullopt;
    auto v = to_int((*m)[1]);
    if (!v || *v > 1000000) return std::nullopt;
    return PlayCard{static_cast<int>(*v)};
  }

  std::string format_move(const Move& move) const override {
    return "play " + std::to_string(std::get<PlayCard>(move).value);
  }

  std::string move_grammar() const override { return "play <card value>"; }
};

}  // namespace

const PuzzleRules& cardnim_rules() {
  static const CardNimRules rules;
  return rules;
}

}  // namespace ppx::rules_detail
