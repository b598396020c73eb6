#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "ppx/core/record.hpp"
#include "ppx/core/state.hpp"
#include "ppx/strategies/params.hpp"

namespace ppx {

enum class Policy { Random, Greedy, DP, BruteForce, MCTS, SimulatedAnnealing, Search };

std::string_view to_string(Policy policy);
std::optional<Policy> parse_policy(std::string_view name);

// Baseline policy for each (puzzle, difficulty).
Policy table_policy(PuzzleId puzzle, Difficulty difficulty);

// Policies implemented for a puzzle (the table entries plus Random where
// the move list is enumerable).
bool supports(PuzzleId puzzle, Policy policy);

// One agent decision: a move, or a failure status for external agents.
struct Decision {
  std::optional<Move> move;
  TerminationStatus status = TerminationStatus::Legal;
  std::string detail;
  int attempts = 1;  // reply lines consumed
};

class Agent {
 public:
  virtual ~Agent() = default;

  virtual std::string label() const = 0;

  virtual void start_match(const GameState& initial, Player seat) {
    (void)initial;
    (void)seat;
  }

  // Set when the agent could not be brought up by start_match.
  virtual std::optional<Decision> start_failure() const { return std::nullopt; }

  // Called only when the agent is the active player.
  virtual Decision decide(const GameState& state) = 0;

  // Feedback for the agent's own move.
  virtual void notify(const Feedback& feedback, const GameState& after) {
    (void)feedback;
    (void)after;
  }

  virtual void end_match(const GameState& final_state) { (void)final_state; }
};

// Built-in strategy agent. Agents read only the public part of the state.
// Throws ConfigError when the policy is not available for the puzzle.
std::unique_ptr<Agent> make_builtin(PuzzleId puzzle, Policy policy, std::uint64_t seed,
                                    const StrategyParams& params = {});

}  // namespace ppx
