#include "ppx/core/engine.hpp"

#include <cstdio>

#include "ppx/core/errors.hpp"

namespace ppx {

GameState instantiate(const PuzzleTemplate& tmpl) {
  for (const auto& [name, value] : tmpl.size_params) {
    if (value <= 0) fail(ErrorCode::InvalidTemplate, "size parameter '" + name + "' must be positive");
  }
  GameState state;
  state.tmpl = tmpl;
  state.payload = rules_for(tmpl.puzzle).generate(tmpl);
  state.active_player = is_two_player(tmpl.puzzle) ? Player::P1 : Player::Solo;
  return state;
}

StepResult step(const GameState& state, const Move& move) {
  if (state.finished()) fail(ErrorCode::SteppedFinishedGame, "the game is already finished");
  if (!move_matches(state.puzzle(), move)) {
    fail(ErrorCode::VariantMismatch, "move does not belong to " + std::string(to_string(state.puzzle())));
  }
  const PuzzleRules& rules = rules_for(state.puzzle());
  const Player mover = state.active_player;
  const bool duel = is_two_player(state.puzzle());

  StepResult result{state, {}};
  GameState& next = result.state;
  Feedback& fb = result.feedback;
  fb = rules.apply(next, move);
  ++next.turn_index;

  if (!fb.legal() && !fb.terminated) {
    if (duel && fb.legality == Feedback::Legality::Illegal && rules.illegal_move_passes()) {
      next.active_player = rules.next_player(next);
    } else {
      fb.terminated = true;
      fb.outcome = duel ? Outcome::win(opponent(mover)) : Outcome::solo_failed();
    }
  } else if (!fb.terminated) {
    next.active_player = rules.next_player(next);
    if (duel && !rules.has_legal_move(next)) {
      fb.terminated = true;
      fb.outcome = Outcome::win(opponent(next.active_player));
    }
  }

  if (fb.terminated) {
    next.phase = Phase::Finished;
    next.outcome = fb.outcome;
  }
  return result;
}

MoveList legal_moves(const GameState& state) {
  if (state.finished()) return {};
  return rules_for(state.puzzle()).legal_moves(state);
}

std::string observe(const GameState& state, Player viewer) {
  std::string text = rules_for(state.puzzle()).observe(state, viewer);
  text += "phase ";
  text += state.finished() ? "finished" : "running";
  text += '\n';
  return text;
}

std::optional<Move> parse_move(PuzzleId puzzle, std::string_view text) {
  if (text.find('\n') != std::string_view::npos) return std::nullopt;
  return rules_for(puzzle).parse_move(text);
}

std::string format_move(PuzzleId puzzle, const Move& move) {
  if (!move_matches(puzzle, move)) fail(ErrorCode::VariantMismatch, "move does not belong to the puzzle");
  return rules_for(puzzle).format_move(move);
}

nlohmann::json snapshot(const GameState& state) {
  nlohmann::json j;
  j["template"] = to_json(state.tmpl);
  j["turn"] = state.turn_index;
  j["active"] = std::string(to_string(state.active_player));
  j["phase"] = state.finished() ? "finished" : "running";
  j["outcome"] = state.outcome ? to_json(*state.outcome) : nlohmann::json(nullptr);
  j["payload"] = rules_for(state.puzzle()).snapshot(state);
  return j;
}

std::uint64_t state_hash(const GameState& state) { return fnv1a64(snapshot(state).dump()); }

std::string hash_hex(std::uint64_t hash) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::vector<std::optional<double>> raw_scores(PuzzleId puzzle, const Outcome& outcome) {
  if (is_two_player(puzzle)) {
    switch (outcome.kind) {
      case Outcome::Kind::Winner:
        return outcome.winner == Player::P1 ? std::vector<std::optional<double>>{1.0, 0.0}
                                            : std::vector<std::optional<double>>{0.0, 1.0};
      case Outcome::Kind::Tie:
        return {0.5, 0.5};
      default:
        fail(ErrorCode::InvalidInput, "solo outcome for a two-player puzzle");
    }
  }
  switch (outcome.kind) {
    case Outcome::Kind::SoloScore: return {outcome.value};
    case Outcome::Kind::SoloFailed: return {std::nullopt};
    default: fail(ErrorCode::InvalidInput, "two-player outcome for a single-player puzzle");
  }
}

}  // namespace ppx
