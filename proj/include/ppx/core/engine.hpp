#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppx/core/rules.hpp"
#include "ppx/core/state.hpp"

namespace ppx {

// S0 for the template: phase Running, turn 0. Deterministic in every
// template field.
GameState instantiate(const PuzzleTemplate& tmpl);

struct StepResult {
  GameState state;
  Feedback feedback;
};

// Sn -> (Sn+1, Fn). Throws SteppedFinishedGame or VariantMismatch.
StepResult step(const GameState& state, const Move& move);

// Exactly the moves that step() accepts as Legal. Empty once finished.
MoveList legal_moves(const GameState& state);

std::string observe(const GameState& state, Player viewer);

std::optional<Move> parse_move(PuzzleId puzzle, std::string_view text);
std::string format_move(PuzzleId puzzle, const Move& move);

// FNV-1a over the canonical full-state snapshot.
std::uint64_t state_hash(const GameState& state);
std::string hash_hex(std::uint64_t hash);

nlohmann::json snapshot(const GameState& state);

// Raw scores implied by a final outcome: two-player win=1/loss=0/tie=0.5;
// single-player the puzzle value, nullopt for a failed run.
std::vector<std::optional<double>> raw_scores(PuzzleId puzzle, const Outcome& outcome);

}  // namespace ppx
