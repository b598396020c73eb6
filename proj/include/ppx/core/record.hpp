#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ppx/core/state.hpp"

namespace ppx {

inline constexpr std::string_view kReplayVersion = "ppx-replay/1";

struct TrajectoryStep {
  std::uint64_t state_hash = 0;  // hash of the state the move was made in
  Player mover = Player::P1;
  Move move;
  Feedback feedback;
};

// A seat that stopped the match from outside the rules (timeout, crash,
// unparseable output).
struct Forfeit {
  Player player = Player::P1;
  TerminationStatus status = TerminationStatus::Legal;
  std::string detail;
  bool operator==(const Forfeit&) const = default;
};

struct MatchRecord {
  PuzzleTemplate tmpl;
  std::vector<std::string> participants;  // seat order
  std::vector<TrajectoryStep> trajectory;
  std::optional<Forfeit> forfeit;
  std::vector<TerminationStatus> statuses;
  std::vector<std::optional<double>> raw_scores;
  double wall_time = 0.0;  // seconds; not serialized

  int seats() const { return static_cast<int>(participants.size()); }
};

// Per-seat raw scores from the final feedback or forfeit.
// Throws UnterminatedTrajectory.
std::vector<std::optional<double>> evaluate(const MatchRecord& record);

// Per-seat statuses implied by the trajectory and forfeit.
std::vector<TerminationStatus> derive_statuses(const MatchRecord& record);

// Line-delimited JSON: header, one line per step, result line.
std::string write_replay(const MatchRecord& record);

// Throws CorruptReplay on malformed input.
MatchRecord read_replay(std::string_view text);

// Re-simulates from the template; throws CorruptReplay on any divergence in
// state hash, mover, feedback, statuses or raw scores.
void verify_replay(const MatchRecord& record);

// Serialize, parse back, verify.
MatchRecord replay_roundtrip(const MatchRecord& record);

// State after the recorded trajectory.
GameState resimulate(const MatchRecord& record);

}  // namespace ppx
