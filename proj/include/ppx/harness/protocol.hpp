#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ppx/harness/match.hpp"
#include "ppx/scoring/scoring.hpp"

namespace ppx::harness {

enum class Mode { Instruction, Program };

// Seed schedule for one (mode, puzzle) combination.
struct ProtocolSpec {
  Mode mode = Mode::Instruction;
  int players = 1;
  bool stochastic = false;
  std::vector<std::uint64_t> seeds;
  int orderings = 1;       // 2: every seed is played with both seatings
  bool alternate = false;  // one seating per seed, first seat on odd seeds

  // Records produced for one participant (solo) or one pair (duel).
  int records_per_unit() const { return static_cast<int>(seeds.size()) * orderings; }
};

// Throws StochasticPuzzleRejected for Instruction mode on a stochastic
// puzzle.
ProtocolSpec protocol_spec(Mode mode, PuzzleId puzzle);

std::vector<MatchJob> instruction_jobs(PuzzleId puzzle, Difficulty difficulty,
                                       const std::vector<AgentSpec>& participants);

// Solo: every participant on seeds 1-10. Duel: every unordered pair on
// seeds 1-5 in both seatings. Throws StochasticPuzzleRejected.
std::vector<MatchRecord> run_instruction_protocol(PuzzleId puzzle, Difficulty difficulty,
                                                  const std::vector<AgentSpec>& participants,
                                                  int threads = 1);

struct ProgramOptions {
  std::optional<AgentSpec> baseline;  // default: table policy
  bool all_pairs = false;             // duels between samples instead of vs baseline
  int threads = 1;
};

struct ProgramJobs {
  std::vector<MatchJob> sample_jobs;
  std::vector<MatchJob> reference_jobs;  // baseline-only solo runs
};

ProgramJobs program_jobs(PuzzleId puzzle, Difficulty difficulty,
                         const std::vector<AgentSpec>& samples, const ProgramOptions& options);

struct ProgramReport {
  std::vector<MatchRecord> records;    // every record a sample took part in
  std::vector<MatchRecord> reference;  // baseline solo runs on the same seeds
  std::map<std::string, double> per_sample;  // mean normalized score
  double avg = 0.0;
  double best = 0.0;
};

// Deterministic puzzles follow the instruction schedule; single-player
// stochastic puzzles run seeds 1-100 per sample; two-player stochastic
// puzzles run seeds 1-50 per pairing with the sample first on odd seeds.
ProgramReport run_program_protocol(PuzzleId puzzle, Difficulty difficulty,
                                   const std::vector<AgentSpec>& samples,
                                   const ProgramOptions& options = {});

// Averages over a report's records (normalized against the reference runs
// for single-player puzzles).
void summarize_program(ProgramReport& report, const std::vector<AgentSpec>& samples);

struct TournamentConfig {
  std::string name = "tournament";
  Mode mode = Mode::Instruction;
  std::vector<std::pair<PuzzleId, Difficulty>> games;
  std::vector<AgentSpec> participants;
  ProgramOptions program;
  int threads = 1;
  std::uint64_t elo_seed = 1;
  int resamples = scoring::kDefaultResamples;
};

// Throws ConfigError with a description of the first problem found.
TournamentConfig parse_config(const nlohmann::json& j);
TournamentConfig load_config(const std::string& path);

struct TournamentResult {
  std::vector<MatchRecord> records;  // deterministic order
  std::vector<scoring::ScoreRow> rows;
  std::map<std::string, double> means;
  std::map<std::string, scoring::Rating> elo;
  scoring::WinMatrix wins;
  std::map<std::string, scoring::StatusFractions> statuses;
  std::vector<std::pair<std::string, ProgramReport>> program;  // per game, program mode
};

TournamentResult run_tournament(const TournamentConfig& config);

// Analytics over an arbitrary record set.
TournamentResult analyze(std::vector<MatchRecord> records, std::uint64_t elo_seed, int resamples);

// replays/NNNN_<puzzle>_<difficulty>_s<seed>.jsonl plus scores.csv,
// summary.csv, summary.txt, win_matrix.csv and status.csv.
void write_outputs(const TournamentResult& result, const std::string& dir);

std::string replay_filename(std::size_t index, const MatchRecord& record);

}  // namespace ppx::harness
