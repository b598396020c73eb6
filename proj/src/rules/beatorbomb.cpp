#include <algorithm>

#include "common.hpp"
#include "registry.hpp"

namespace ppx::rules_detail {
namespace {

using beatorbomb::Action;
using beatorbomb::CardDuelState;
using beatorbomb::Play;

std::string play_text(const Play& p) {
  return beatorbomb::card_label(p.card) + (p.action == Action::Compete ? " compete" : " giveup");
}

std::string hand_text(const std::vector<int>& hand) {
  std::string out = "[";
  for (std::size_t i = 0; i < hand.size(); ++i) {
    if (i) out += ", ";
    out += beatorbomb::card_label(hand[i]);
  }
  return out + "]";
}

class BeatOrBombRules final : public PuzzleRules {
 public:
  PuzzleId puzzle() const override { return PuzzleId::BeatOrBombSto; }

  Payload generate(const PuzzleTemplate& tmpl) const override {
    require_positive_params(tmpl, {"num_cards"});
    auto rng = tmpl.rng("deal");
    return beatorbomb::deal(static_cast<int>(tmpl.param("num_cards")), rng);
  }

  MoveList legal_moves(const GameState& state) const override {
    const CardDuelState& duel = state.as<CardDuelState>();
    auto hand = duel.hands[static_cast<std::size_t>(seat_index(state.active_player))];
    hand.erase(std::unique(hand.begin(), hand.end()), hand.end());
    MoveList list;
    for (int card : hand) {
      list.moves.emplace_back(Play{card, Action::Compete});
      list.moves.emplace_back(Play{card, Action::GiveUp});
    }
    return list;
  }

  Feedback apply(GameState& state, const Move& move) const override {
    CardDuelState& duel = state.as<CardDuelState>();
    const Play play = std::get<Play>(move);
    const int seat = seat_index(state.active_player);
    if (!beatorbomb::holds(duel.hands[static_cast<std::size_t>(seat)], play.card)) {
      return illegal("card " + beatorbomb::card_label(play.card) + " is not in your hand");
    }
    if (seat == 0) {
      duel.pending = play;
      return legal();
    }
    const Play first = *duel.pending;
    duel.pending.reset();
    auto [a1, a2] = beatorbomb::resolve_round(duel, first, play);
    Feedback fb = legal({{"round", duel.rounds.size()},
                         {"P1", play_text(first)},
                         {"P2", play_text(play)},
                         {"award_P1", a1},
                         {"award_P2", a2}});
    if (duel.hands[0].empty()) return finish(fb, compare_totals(duel.points[0], duel.points[1]));
    return fb;
  }

  // Hands are public; the choice P1 has locked in for the current round
  // is not.
  std::string observe(const GameState& state, Player viewer) const override {
    const CardDuelState& duel = state.as<CardDuelState>();
    std::string out = header(state, viewer);
    out += "hand_P1 " + hand_text(duel.hands[0]) + '\n';
    out += "hand_P2 " + hand_text(duel.hands[1]) + '\n';
    out += "points " + std::to_string(duel.points[0]) + ' ' + std::to_string(duel.points[1]) + '\n';
    out += "rounds " + std::to_string(duel.rounds.size()) + '\n';
    for (const auto& r : duel.rounds) {
      out += "round P1 " + play_text(r.p1) + " P2 " + play_text(r.p2) + " award " +
             std::to_string(r.award1) + ' ' + std::to_string(r.award2) + '\n';
    }
    if (duel.pending) {
      out += viewer == Player::P1 ? "locked " + play_text(*duel.pending) + '\n'
                                  : std::string("locked hidden\n");
    }
    return out;
  }

  nlohmann::json snapshot(const GameState& state) const override {
    const CardDuelState& duel = state.as<CardDuelState>();
    nlohmann::json rounds = nlohmann::json::array();
    for (const auto& r : duel.rounds) rounds.push_back({play_text(r.p1), play_text(r.p2), r.award1, r.award2});
    return {{"hands", duel.hands}, {"points", duel.points}, {"rounds", rounds},
            {"pending", duel.pending ? nlohmann::json(play_text(*duel.pending)) : nlohmann::json(nullptr)},
            {"hand_total", duel.hand_total}};
  }

  std::optional<Move> parse_move(std::string_view text) const override {
    static const std::regex re(R"(play\s+(\S+)\s+(compete|giveup))");
    auto m = match(trim(text), re);
    if (!m) return std::nullopt;
    auto card = beatorbomb::parse_card((*m)[1].str());
    if (!card) return std::nullopt;
    return Play{*card, (*m)[2].text == "compete" ? Action::Compete : Action::GiveUp};
  }

  std::string format_move(const Move& move) const override { return "play " + play_text(std::get<Play>(move)); }

  std::string move_grammar() const override {
    return "play <card> compete | play <card> giveup   (cards A, 2..10, J, Q, K)";
  }
};

}  // namespace

const PuzzleRules& beatorbomb_rules() {
  static const BeatOrBombRules rules;
  return rules;
}

}  // namespace ppx::rules_detail
