#include "ppx/harness/protocol.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "ppx/core/errors.hpp"

namespace ppx::harness {

namespace {

std::vector<std::uint64_t> seed_range(std::uint64_t last) {
  std::vector<std::uint64_t> seeds(last);
  std::iota(seeds.begin(), seeds.end(), std::uint64_t{1});
  return seeds;
}

// Jobs for one pair under a duel schedule, first seating first.
void duel_jobs(std::vector<MatchJob>& out, PuzzleId puzzle, Difficulty difficulty,
               const ProtocolSpec& spec, const AgentSpec& a, const AgentSpec& b) {
  for (std::uint64_t seed : spec.seeds) {
    const PuzzleTemplate tmpl = standard_template(puzzle, difficulty, seed);
    if (spec.alternate) {
      if (seed % 2 == 1) {
        out.push_back({tmpl, {a, b}});
      } else {
        out.push_back({tmpl, {b, a}});
      }
    } else {
      out.push_back({tmpl, {a, b}});
      if (spec.orderings == 2) out.push_back({tmpl, {b, a}});
    }
  }
}

void check_labels(const std::vector<AgentSpec>& participants) {
  std::set<std::string> seen;
  for (const auto& p : participants) {
    if (p.label.empty()) fail(ErrorCode::ConfigError, "participant without a label");
    if (!seen.insert(p.label).second) fail(ErrorCode::ConfigError, "duplicate label '" + p.label + "'");
  }
}

void check_supported(const AgentSpec& spec, PuzzleId puzzle) {
  if (spec.kind == AgentSpec::Kind::Builtin && !spec.use_table && !supports(puzzle, spec.policy)) {
    fail(ErrorCode::ConfigError, spec.label + ": " + std::string(to_string(spec.policy)) +
                                     " is not available for " + std::string(to_string(puzzle)));
  }
}

template <class T>
T field(const nlohmann::json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(ErrorCode::ConfigError, std::string("bad value for '") + key + "'");
  }
}

AgentSpec parse_participant(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorCode::ConfigError, "participant entries must be objects");
  const auto label = field<std::string>(j, "label", "");
  const auto agent = field<std::string>(j, "agent", "");
  if (label.empty() || agent.empty()) fail(ErrorCode::ConfigError, "participant needs label and agent");
  AgentSpec spec = parse_agent_spec(agent, label);
  spec.move_seconds = field<double>(j, "move_seconds", spec.move_seconds);
  spec.cpu_seconds = field<int>(j, "cpu_seconds", spec.cpu_seconds);
  spec.legal_hints = field<bool>(j, "legal_hints", spec.legal_hints);
  spec.params.mcts.simulations = field<int>(j, "mcts_simulations", spec.params.mcts.simulations);
  spec.params.sa.iterations = field<int>(j, "sa_iterations", spec.params.sa.iterations);
  spec.params.superply_depth = field<int>(j, "superply_depth", spec.params.superply_depth);
  if (spec.move_seconds <= 0 || spec.cpu_seconds <= 0) {
    fail(ErrorCode::ConfigError, label + ": limits must be positive");
  }
  return spec;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

ProtocolSpec protocol_spec(Mode mode, PuzzleId puzzle) {
  ProtocolSpec spec;
  spec.mode = mode;
  spec.players = traits(puzzle).players;
  spec.stochastic = traits(puzzle).stochastic;
  if (spec.stochastic) {
    if (mode == Mode::Instruction) {
      fail(ErrorCode::StochasticPuzzleRejected,
           std::string(to_string(puzzle)) + " is stochastic; only program mode runs it");
    }
    spec.seeds = seed_range(spec.players == 1 ? 100 : 50);
    spec.alternate = spec.players == 2;
    return spec;
  }
  spec.seeds = seed_range(spec.players == 1 ? 10 : 5);
  spec.orderings = spec.players == 1 ? 1 : 2;
  return spec;
}

std::vector<MatchJob> instruction_jobs(PuzzleId puzzle, Difficulty difficulty,
                                       const std::vector<AgentSpec>& participants) {
  const ProtocolSpec spec = protocol_spec(Mode::Instruction, puzzle);
  check_labels(participants);
  for (const auto& p : participants) check_supported(p, puzzle);
  std::vector<MatchJob> jobs;
  if (spec.players == 1) {
    for (const auto& p : participants) {
      for (std::uint64_t seed : spec.seeds) jobs.push_back({standard_template(puzzle, difficulty, seed), {p}});
    }
    return jobs;
  }
  if (participants.size() < 2) fail(ErrorCode::ConfigError, "a two-player puzzle needs two participants");
  for (std::size_t i = 0; i < participants.size(); ++i) {
    for (std::size_t j = i + 1; j < participants.size(); ++j) {
      duel_jobs(jobs, puzzle, difficulty, spec, participants[i], participants[j]);
    }
  }
  return jobs;
}

std::vector<MatchRecord> run_instruction_protocol(PuzzleId puzzle, Difficulty difficulty,
                                                  const std::vector<AgentSpec>& participants,
                                                  int threads) {
  return run_jobs(instruction_jobs(puzzle, difficulty, participants), threads);
}

ProgramJobs program_jobs(PuzzleId puzzle, Difficulty difficulty,
                         const std::vector<AgentSpec>& samples, const ProgramOptions& options) {
  const ProtocolSpec spec = protocol_spec(Mode::Program, puzzle);
  AgentSpec baseline = options.baseline.value_or(AgentSpec::table("baseline"));
  std::vector<AgentSpec> everyone = samples;
  everyone.push_back(baseline);
  check_labels(everyone);
  for (const auto& p : everyone) check_supported(p, puzzle);

  ProgramJobs jobs;
  if (spec.players == 1) {
    for (const auto& s : samples) {
      for (std::uint64_t seed : spec.seeds) {
        jobs.sample_jobs.push_back({standard_template(puzzle, difficulty, seed), {s}});
      }
    }
    for (std::uint64_t seed : spec.seeds) {
      jobs.reference_jobs.push_back({standard_template(puzzle, difficulty, seed), {baseline}});
    }
    return jobs;
  }
  if (options.all_pairs) {
    if (samples.size() < 2) fail(ErrorCode::ConfigError, "all-pairs needs at least two samples");
    for (std::size_t i = 0; i < samples.size(); ++i) {
      for (std::size_t j = i + 1; j < samples.size(); ++j) {
        duel_jobs(jobs.sample_jobs, puzzle, difficulty, spec, samples[i], samples[j]);
      }
    }
  } else {
    for (const auto& s : samples) duel_jobs(jobs.sample_jobs, puzzle, difficulty, spec, s, baseline);
  }
  return jobs;
}

void summarize_program(ProgramReport& report, const std::vector<AgentSpec>& samples) {
  std::vector<MatchRecord> all = report.records;
  all.insert(all.end(), report.reference.begin(), report.reference.end());
  const auto means = scoring::mean_scores(scoring::score_rows(all));
  report.per_sample.clear();
  for (const auto& s : samples) {
    auto it = means.find(s.label);
    report.per_sample[s.label] = it == means.end() ? 0.0 : it->second;
  }
  report.avg = 0.0;
  report.best = 0.0;
  if (report.per_sample.empty()) return;
  for (const auto& [label, v] : report.per_sample) {
    report.avg += v;
    report.best = std::max(report.best, v);
  }
  report.avg /= static_cast<double>(report.per_sample.size());
}

ProgramReport run_program_protocol(PuzzleId puzzle, Difficulty difficulty,
                                   const std::vector<AgentSpec>& samples,
                                   const ProgramOptions& options) {
  const ProgramJobs jobs = program_jobs(puzzle, difficulty, samples, options);
  ProgramReport report;
  report.records = run_jobs(jobs.sample_jobs, options.threads);
  report.reference = run_jobs(jobs.reference_jobs, options.threads);
  summarize_program(report, samples);
  return report;
}

TournamentConfig parse_config(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorCode::ConfigError, "configuration must be a JSON object");
  TournamentConfig cfg;
  cfg.name = field<std::string>(j, "name", cfg.name);
  const auto mode = field<std::string>(j, "mode", "instruction");
  if (mode == "instruction") {
    cfg.mode = Mode::Instruction;
  } else if (mode == "program") {
    cfg.mode = Mode::Program;
  } else {
    fail(ErrorCode::ConfigError, "mode must be instruction or program");
  }
  if (!j.contains("games") || !j["games"].is_array() || j["games"].empty()) {
    fail(ErrorCode::ConfigError, "games must be a non-empty array");
  }
  for (const auto& g : j["games"]) {
    const auto puzzle = parse_puzzle(field<std::string>(g, "puzzle", ""));
    if (!puzzle) fail(ErrorCode::ConfigError, "unknown puzzle in games");
    std::vector<Difficulty> levels;
    if (g.contains("difficulty")) {
      const auto d = parse_difficulty(field<std::string>(g, "difficulty", ""));
      if (!d) fail(ErrorCode::ConfigError, "unknown difficulty in games");
      levels.push_back(*d);
    } else {
      levels.assign(kAllDifficulties.begin(), kAllDifficulties.end());
    }
    for (Difficulty d : levels) cfg.games.emplace_back(*puzzle, d);
  }
  if (!j.contains("participants") || !j["participants"].is_array() || j["participants"].empty()) {
    fail(ErrorCode::ConfigError, "participants must be a non-empty array");
  }
  for (const auto& p : j["participants"]) cfg.participants.push_back(parse_participant(p));
  check_labels(cfg.participants);
  if (j.contains("baseline")) cfg.program.baseline = parse_participant(j["baseline"]);
  cfg.program.all_pairs = field<bool>(j, "all_pairs", false);
  cfg.threads = std::max(1, field<int>(j, "threads", 1));
  cfg.program.threads = cfg.threads;
  cfg.elo_seed = field<std::uint64_t>(j, "elo_seed", cfg.elo_seed);
  cfg.resamples = field<int>(j, "resamples", cfg.resamples);
  if (cfg.resamples < 0) fail(ErrorCode::ConfigError, "resamples must be >= 0");
  return cfg;
}

TournamentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ConfigError, "cannot read " + path);
  const auto j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::ConfigError, path + " is not valid JSON");
  return parse_config(j);
}

TournamentResult analyze(std::vector<MatchRecord> records, std::uint64_t elo_seed, int resamples) {
  TournamentResult r;
  r.records = std::move(records);
  r.rows = scoring::score_rows(r.records);
  r.means = scoring::mean_scores(r.rows);
  const auto matches = scoring::matches_from_records(r.records);
  if (!matches.empty()) r.elo = scoring::tournament_elo(matches, elo_seed, resamples);
  r.wins = scoring::win_matrix(matches);
  r.statuses = scoring::status_distribution(r.records);
  return r;
}

TournamentResult run_tournament(const TournamentConfig& config) {
  std::vector<MatchRecord> records;
  std::vector<std::pair<std::string, ProgramReport>> program;
  if (config.mode == Mode::Instruction) {
    // Validate every game before running any of them.
    std::vector<MatchJob> jobs;
    for (const auto& [puzzle, difficulty] : config.games) {
      auto more = instruction_jobs(puzzle, difficulty, config.participants);
      jobs.insert(jobs.end(), more.begin(), more.end());
    }
    records = run_jobs(jobs, config.threads);
  } else {
    std::vector<ProgramJobs> all;
    for (const auto& [puzzle, difficulty] : config.games) {
      all.push_back(program_jobs(puzzle, difficulty, config.participants, config.program));
    }
    for (std::size_t g = 0; g < all.size(); ++g) {
      ProgramReport report;
      report.records = run_jobs(all[g].sample_jobs, config.threads);
      report.reference = run_jobs(all[g].reference_jobs, config.threads);
      summarize_program(report, config.participants);
      records.insert(records.end(), report.records.begin(), report.records.end());
      records.insert(records.end(), report.reference.begin(), report.reference.end());
      const auto& [puzzle, difficulty] = config.games[g];
      program.emplace_back(std::string(to_string(puzzle)) + "/" + std::string(to_string(difficulty)),
                           std::move(report));
    }
  }
  TournamentResult result = analyze(std::move(records), config.elo_seed, config.resamples);
  result.program = std::move(program);
  return result;
}

std::string replay_filename(std::size_t index, const MatchRecord& record) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%04zu_%s_%s_s%llu.jsonl", index,
                std::string(to_string(record.tmpl.puzzle)).c_str(),
                std::string(to_string(record.tmpl.difficulty)).c_str(),
                static_cast<unsigned long long>(record.tmpl.seed));
  return buf;
}

void write_outputs(const TournamentResult& result, const std::string& dir) {
  namespace fs = std::filesystem;
  const fs::path root(dir);
  fs::create_directories(root / "replays");
  auto write = [](const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::ConfigError, "cannot write " + path.string());
    out << text;
  };
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    write(root / "replays" / replay_filename(i + 1, result.records[i]), write_replay(result.records[i]));
  }
  write(root / "scores.csv", scoring::score_rows_csv(result.rows));
  write(root / "summary.csv", scoring::summary_csv(result.means, result.elo));
  write(root / "win_matrix.csv", scoring::win_matrix_csv(result.wins));
  write(root / "status.csv", scoring::status_csv(result.statuses));
  std::string pretty = scoring::summary_pretty(result.means, result.elo);
  if (!result.program.empty()) {
    std::ostringstream os;
    os << "game,sample,mean_normalized\n";
    for (const auto& [game, report] : result.program) {
      for (const auto& [label, v] : report.per_sample) os << game << ',' << label << ',' << fixed(v) << '\n';
      os << game << ",Avg," << fixed(report.avg) << '\n';
      os << game << ",Best," << fixed(report.best) << '\n';
    }
    write(root / "program.csv", os.str());
  }
  write(root / "summary.txt", pretty);
}

}  // namespace ppx::harness
