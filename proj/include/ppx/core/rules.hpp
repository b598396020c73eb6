#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ppx/core/state.hpp"

namespace ppx {

struct MoveList {
  std::vector<Move> moves;
  // Set when the move space is unbounded and only a prefix is listed.
  bool truncated = false;
};

// Per-puzzle rule set. The engine owns turn bookkeeping, generic
// termination and variant checks; a PuzzleRules implementation owns the
// payload.
class PuzzleRules {
 public:
  virtual ~PuzzleRules() = default;

  virtual PuzzleId puzzle() const = 0;

  // Initial payload; throws InvalidTemplate.
  virtual Payload generate(const PuzzleTemplate& tmpl) const = 0;

  virtual MoveList legal_moves(const GameState& state) const = 0;

  // Applies `move` for state.active_player to state.payload. Illegal moves
  // leave the payload untouched (except where the rules say otherwise) and
  // report Illegal. Legal terminal moves set terminated and outcome.
  virtual Feedback apply(GameState& state, const Move& move) const = 0;

  // Superply passes the turn on an invalid selection instead of ending.
  virtual bool illegal_move_passes() const { return false; }

  virtual Player next_player(const GameState& state) const;

  virtual bool has_legal_move(const GameState& state) const {
    return !legal_moves(state).moves.empty();
  }

  // Canonical text of everything `viewer` is allowed to know.
  virtual std::string observe(const GameState& state, Player viewer) const = 0;

  // Complete payload including hidden fields (hashing, debugging).
  virtual nlohmann::json snapshot(const GameState& state) const = 0;

  // Single-line move grammar.
  virtual std::optional<Move> parse_move(std::string_view text) const = 0;
  virtual std::string format_move(const Move& move) const = 0;
  virtual std::string move_grammar() const = 0;
};

const PuzzleRules& rules_for(PuzzleId puzzle);

}  // namespace ppx
