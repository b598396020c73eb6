#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ppx/core/record.hpp"
#include "ppx/core/types.hpp"

namespace ppx::scoring {

inline constexpr double kInitialRating = 1000.0;
inline constexpr double kEloK = 32.0;
inline constexpr int kDefaultResamples = 1000;

// Scores of every participant on one instance, mapped into [0, 1].
// HigherBetter: value / max (all zero -> all zero). LowerBetter: min / value.
// Two-player raws already lie in [0, 1] and pass through.
// Throws InvalidInput on an empty list, a non-finite raw or a LowerBetter
// raw <= 0.
std::vector<double> normalize(const std::vector<double>& raws, ScoreDirection direction,
                              bool two_player = false);

// As above, with missing raws (failed runs) scored 0 and excluded from the
// reference set.
std::vector<double> normalize(const std::vector<std::optional<double>>& raws,
                              ScoreDirection direction, bool two_player = false);

double elo_expected(double r_a, double r_b);
double elo_update(double r_a, double r_b, double s_a);

struct MatchResult {
  std::string a;
  std::string b;
  double s_a = 0.5;
  bool operator==(const MatchResult&) const = default;
};

// One match per unordered pair and seed: higher normalized score wins,
// equal scores tie. Pairs are listed in name order within each seed.
std::vector<MatchResult> solo_to_matches(const std::vector<std::map<std::string, double>>& per_seed);

struct Rating {
  double rating = kInitialRating;
  double lo = kInitialRating;  // 95% percentile interval
  double hi = kInitialRating;
};

// Sequential updates over the log under a seeded shuffle. The interval comes
// from `resamples` further reshuffles of the match order.
// Throws InvalidInput on an empty log.
std::map<std::string, Rating> tournament_elo(const std::vector<MatchResult>& log,
                                             std::uint64_t ordering_seed,
                                             int resamples = kDefaultResamples);

// Ratings after applying the log in the given order.
std::map<std::string, double> sequential_elo(const std::vector<MatchResult>& log);

struct WinMatrix {
  std::vector<std::string> participants;  // sorted
  std::vector<std::vector<int>> wins;     // wins[i][j]: i beat j
  std::vector<std::vector<int>> ties;

  // wins(i over j) / decisive games; absent on the diagonal and for pairs
  // without a decisive game.
  std::optional<double> rate(std::size_t i, std::size_t j) const;
};

WinMatrix win_matrix(const std::vector<MatchResult>& log);
WinMatrix win_matrix(const std::vector<MatchRecord>& records);

using StatusFractions = std::array<double, kAllStatuses.size()>;

std::map<std::string, StatusFractions> status_distribution(const std::vector<MatchRecord>& records);

// Per-seat normalized score of each record, normalized against every record
// sharing the same (puzzle, difficulty, seed) for single-player puzzles.
struct ScoreRow {
  std::string participant;
  PuzzleId puzzle = PuzzleId::SudoKill;
  Difficulty difficulty = Difficulty::Easy;
  std::uint64_t seed = 0;
  int seat = 0;
  std::optional<double> raw;
  double normalized = 0.0;
  TerminationStatus status = TerminationStatus::Legal;
};

std::vector<ScoreRow> score_rows(const std::vector<MatchRecord>& records);

// Elo input derived from records: two-player records contribute one match
// each (S = seat-0 raw score); single-player records are paired per seed.
std::vector<MatchResult> matches_from_records(const std::vector<MatchRecord>& records);

// Mean normalized score per participant.
std::map<std::string, double> mean_scores(const std::vector<ScoreRow>& rows);

std::string score_rows_csv(const std::vector<ScoreRow>& rows);
std::string summary_csv(const std::map<std::string, double>& means,
                        const std::map<std::string, Rating>& elo);
std::string win_matrix_csv(const WinMatrix& matrix);
std::string status_csv(const std::map<std::string, StatusFractions>& dist);
std::string summary_pretty(const std::map<std::string, double>& means,
                           const std::map<std::string, Rating>& elo);

}  // namespace ppx::scoring
