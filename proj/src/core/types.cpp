#include "ppx/core/types.hpp"

#include "ppx/core/errors.hpp"

namespace ppx {

namespace {

using enum ScoreDirection;

constexpr std::array<PuzzleTraits, 13> kTraits = {{
    {"SudoKill", 2, false, HigherBetter},
    {"TidyTower", 1, false, HigherBetter},
    {"CardNim", 2, false, HigherBetter},
    {"OptimalTouring", 1, false, HigherBetter},
    {"CountMaximalCocktails", 1, false, HigherBetter},
    {"MaxMaximalCocktails", 2, false, HigherBetter},
    {"ExclusivityParticles", 2, false, HigherBetter},
    {"ExclusivityProbes", 1, true, LowerBetter},
    {"RubyRisks", 1, true, HigherBetter},
    {"BeatOrBombSto", 2, true, HigherBetter},
    {"MaxTarget", 1, true, HigherBetter},
    {"LargerTarget", 2, true, HigherBetter},
    {"Superply", 2, false, HigherBetter},
}};

constexpr std::array<std::string_view, 6> kStatusNames = {
    "Legal", "NotFollowInstruction", "Timeout", "RuleViolation", "RuntimeError", "SyntaxError",
};

}  // namespace

const PuzzleTraits& traits(PuzzleId id) { return kTraits[static_cast<std::size_t>(id)]; }

std::string_view to_string(PuzzleId id) { return traits(id).name; }

std::string_view to_string(Difficulty d) { return d == Difficulty::Easy ? "Easy" : "Normal"; }

std::string_view to_string(Player p) {
  switch (p) {
    case Player::P1: return "P1";
    case Player::P2: return "P2";
    case Player::Solo: return "Solo";
  }
  return "?";
}

std::string_view to_string(TerminationStatus s) {
  return kStatusNames[static_cast<std::size_t>(s)];
}

std::optional<PuzzleId> parse_puzzle(std::string_view name) {
  for (PuzzleId id : kAllPuzzles) {
    if (traits(id).name == name) return id;
  }
  return std::nullopt;
}

std::optional<Difficulty> parse_difficulty(std::string_view name) {
  if (name == "Easy" || name == "easy") return Difficulty::Easy;
  if (name == "Normal" || name == "normal") return Difficulty::Normal;
  return std::nullopt;
}

std::optional<Player> parse_player(std::string_view name) {
  if (name == "P1") return Player::P1;
  if (name == "P2") return Player::P2;
  if (name == "Solo") return Player::Solo;
  return std::nullopt;
}

std::optional<TerminationStatus> parse_status(std::string_view name) {
  for (std::size_t i = 0; i < kStatusNames.size(); ++i) {
    if (kStatusNames[i] == name) return static_cast<TerminationStatus>(i);
  }
  return std::nullopt;
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidTemplate: return "InvalidTemplate";
    case ErrorCode::VariantMismatch: return "VariantMismatch";
    case ErrorCode::SteppedFinishedGame: return "SteppedFinishedGame";
    case ErrorCode::UnterminatedTrajectory: return "UnterminatedTrajectory";
    case ErrorCode::CorruptReplay: return "CorruptReplay";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::HoldNotAbove: return "HoldNotAbove";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::MalformedAnswer: return "MalformedAnswer";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::GameUnfinished: return "GameUnfinished";
    case ErrorCode::NoBoxesLeft: return "NoBoxesLeft";
    case ErrorCode::CardNotHeld: return "CardNotHeld";
    case ErrorCode::EmptyBag: return "EmptyBag";
    case ErrorCode::NoPicksLeft: return "NoPicksLeft";
    case ErrorCode::NoLegalMoves: return "NoLegalMoves";
    case ErrorCode::StochasticPuzzleRejected: return "StochasticPuzzleRejected";
    case ErrorCode::InvalidMove: return "InvalidMove";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace ppx
