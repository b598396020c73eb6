#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ppx {

enum class PuzzleId : std::uint8_t {
  SudoKill,
  TidyTower,
  CardNim,
  OptimalTouring,
  CountMaximalCocktails,
  MaxMaximalCocktails,
  ExclusivityParticles,
  ExclusivityProbes,
  RubyRisks,
  BeatOrBombSto,
  MaxTarget,
  LargerTarget,
  Superply,
};

inline constexpr std::array<PuzzleId, 13> kAllPuzzles = {
    PuzzleId::SudoKill,          PuzzleId::TidyTower,
    PuzzleId::CardNim,           PuzzleId::OptimalTouring,
    PuzzleId::CountMaximalCocktails, PuzzleId::MaxMaximalCocktails,
    PuzzleId::ExclusivityParticles,  PuzzleId::ExclusivityProbes,
    PuzzleId::RubyRisks,         PuzzleId::BeatOrBombSto,
    PuzzleId::MaxTarget,         PuzzleId::LargerTarget,
    PuzzleId::Superply,
};

enum class Difficulty : std::uint8_t { Easy, Normal };

inline constexpr std::array<Difficulty, 2> kAllDifficulties = {Difficulty::Easy,
                                                               Difficulty::Normal};

enum class Player : std::uint8_t { P1, P2, Solo };

enum class Phase : std::uint8_t { Running, Finished };

enum class TerminationStatus : std::uint8_t {
  Legal,
  NotFollowInstruction,
  Timeout,
  RuleViolation,
  RuntimeError,
  SyntaxError,
};

inline constexpr std::array<TerminationStatus, 6> kAllStatuses = {
    TerminationStatus::Legal,        TerminationStatus::NotFollowInstruction,
    TerminationStatus::Timeout,      TerminationStatus::RuleViolation,
    TerminationStatus::RuntimeError, TerminationStatus::SyntaxError,
};

enum class ScoreDirection : std::uint8_t { HigherBetter, LowerBetter };

struct PuzzleTraits {
  std::string_view name;
  int players;  // 1 or 2
  bool stochastic;
  ScoreDirection direction;
};

const PuzzleTraits& traits(PuzzleId id);

inline bool is_two_player(PuzzleId id) { return traits(id).players == 2; }

std::string_view to_string(PuzzleId id);
std::string_view to_string(Difficulty d);
std::string_view to_string(Player p);
std::string_view to_string(TerminationStatus s);

std::optional<PuzzleId> parse_puzzle(std::string_view name);
std::optional<Difficulty> parse_difficulty(std::string_view name);
std::optional<Player> parse_player(std::string_view name);
std::optional<TerminationStatus> parse_status(std::string_view name);

inline Player opponent(Player p) {
  return p == Player::P1 ? Player::P2 : p == Player::P2 ? Player::P1 : Player::Solo;
}

// P1 and Solo both occupy seat 0.
inline int seat_index(Player p) { return p == Player::P2 ? 1 : 0; }

inline Player seat_player(PuzzleId id, int seat) {
  if (!is_two_player(id)) return Player::Solo;
  return seat == 0 ? Player::P1 : Player::P2;
}

}  // namespace ppx
