#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "ppx/core/template.hpp"
#include "ppx/core/types.hpp"
#include "ppx/puzzles/bags.hpp"
#include "ppx/puzzles/beatorbomb.hpp"
#include "ppx/puzzles/cardnim.hpp"
#include "ppx/puzzles/cocktails.hpp"
#include "ppx/puzzles/maxcocktails.hpp"
#include "ppx/puzzles/particles.hpp"
#include "ppx/puzzles/probes.hpp"
#include "ppx/puzzles/ruby.hpp"
#include "ppx/puzzles/sudokill.hpp"
#include "ppx/puzzles/superply.hpp"
#include "ppx/puzzles/tidytower.hpp"
#include "ppx/puzzles/touring.hpp"

namespace ppx {

// One alternative per puzzle family (MaxTarget and LargerTarget share
// PickBag). The alternative must agree with the state's puzzle.
using Move = std::variant<sudokill::Placement, tidytower::Rotation, cardnim::PlayCard,
                          touring::TourStep, cocktails::Answer, maxcocktails::AddEdge,
                          particles::Place, probes::Probe, ruby::Request, beatorbomb::Play,
                          bags::PickBag, superply::Claim>;

using Payload =
    std::variant<sudokill::Board, tidytower::Tower, cardnim::NimState, touring::TourState,
                 cocktails::CocktailGame, maxcocktails::EdgeGameState,
                 particles::ParticleSpace, probes::ProbeWorld, ruby::RubyWorld,
                 beatorbomb::CardDuelState, bags::BagWorld, superply::SuperplyBoard>;

bool move_matches(PuzzleId puzzle, const Move& move);

struct Outcome {
  enum class Kind { Winner, Tie, SoloScore, SoloFailed };
  Kind kind = Kind::Tie;
  Player winner = Player::P1;  // Kind::Winner only
  double value = 0.0;          // Kind::SoloScore only

  static Outcome win(Player p) { return {Kind::Winner, p, 0.0}; }
  static Outcome tie() { return {Kind::Tie, Player::P1, 0.0}; }
  static Outcome solo(double v) { return {Kind::SoloScore, Player::Solo, v}; }
  static Outcome solo_failed() { return {Kind::SoloFailed, Player::Solo, 0.0}; }

  bool operator==(const Outcome&) const = default;
};

struct Feedback {
  enum class Legality { Legal, Illegal, Malformed };
  Legality legality = Legality::Legal;
  std::string reason;  // empty when legal
  bool terminated = false;
  std::optional<Outcome> outcome;  // present iff terminated
  nlohmann::json revealed;         // null when nothing is revealed

  bool legal() const { return legality == Legality::Legal; }
  bool operator==(const Feedback&) const = default;
};

struct GameState {
  PuzzleTemplate tmpl;
  Payload payload;
  int turn_index = 0;
  Player active_player = Player::P1;
  Phase phase = Phase::Running;
  std::optional<Outcome> outcome;

  PuzzleId puzzle() const { return tmpl.puzzle; }
  bool finished() const { return phase == Phase::Finished; }

  template <class T>
  const T& as() const {
    return std::get<T>(payload);
  }
  template <class T>
  T& as() {
    return std::get<T>(payload);
  }

  bool operator==(const GameState&) const = default;
};

nlohmann::json to_json(const Outcome& outcome);
Outcome outcome_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Feedback& feedback);
Feedback feedback_from_json(const nlohmann::json& j);

}  // namespace ppx
