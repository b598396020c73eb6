#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ppx/core/engine.hpp"
#include "ppx/core/errors.hpp"
#include "ppx/harness/protocol.hpp"

namespace {

using namespace ppx;

constexpr int kExitConfig = 2;
constexpr int kExitReplay = 3;

PuzzleId puzzle_arg(const std::string& name) {
  auto p = parse_puzzle(name);
  if (!p) fail(ErrorCode::ConfigError, "unknown puzzle '" + name + "'");
  return *p;
}

Difficulty difficulty_arg(const std::string& name) {
  auto d = parse_difficulty(name);
  if (!d) fail(ErrorCode::ConfigError, "unknown difficulty '" + name + "'");
  return *d;
}

PuzzleTemplate template_arg(const std::string& puzzle, const std::string& difficulty,
                            std::uint64_t seed, const std::vector<std::string>& params,
                            const std::vector<std::string>& flags) {
  PuzzleTemplate t = standard_template(puzzle_arg(puzzle), difficulty_arg(difficulty), seed);
  for (const auto& kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) fail(ErrorCode::ConfigError, "parameter '" + kv + "' is not key=value");
    try {
      t.size_params[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
    } catch (const std::exception&) {
      fail(ErrorCode::ConfigError, "parameter '" + kv + "' needs an integer value");
    }
  }
  t.rule_flags.insert(flags.begin(), flags.end());
  return t;
}

MatchRecord read_replay_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::CorruptReplay, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  MatchRecord record = read_replay(buf.str());
  verify_replay(record);
  return record;
}

std::string scores_text(const MatchRecord& record) {
  std::ostringstream os;
  for (int seat = 0; seat < record.seats(); ++seat) {
    const auto s = static_cast<std::size_t>(seat);
    os << to_string(seat_player(record.tmpl.puzzle, seat)) << " " << record.participants[s]
       << ": status " << to_string(record.statuses[s]) << ", raw ";
    if (record.raw_scores[s]) {
      os << *record.raw_scores[s];
    } else {
      os << "none";
    }
    os << "\n";
  }
  if (record.forfeit) os << "forfeit: " << record.forfeit->detail << "\n";
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ConfigError, "cannot write " + path);
  out << text;
}

int cmd_gen(const std::string& puzzle, const std::string& difficulty, std::uint64_t seed,
            const std::vector<std::string>& params, const std::vector<std::string>& flags,
            const std::string& viewer, bool reveal) {
  const PuzzleTemplate t = template_arg(puzzle, difficulty, seed, params, flags);
  const GameState s = instantiate(t);
  std::cout << "template " << to_json(t).dump() << "\n";
  Player who = s.active_player;
  if (!viewer.empty()) {
    auto p = parse_player(viewer);
    if (!p) fail(ErrorCode::ConfigError, "unknown viewer '" + viewer + "'");
    who = *p;
  }
  std::cout << observe(s, who) << "\n";
  std::cout << "grammar " << rules_for(t.puzzle).move_grammar() << "\n";
  if (reveal) std::cout << "snapshot " << snapshot(s).dump() << "\n";
  return 0;
}

int cmd_play(const std::string& puzzle, const std::string& difficulty, std::uint64_t seed,
             const std::vector<std::string>& params, const std::vector<std::string>& flags,
             const std::string& p1, const std::string& p2, double move_seconds,
             const std::string& out, bool quiet) {
  const PuzzleTemplate t = template_arg(puzzle, difficulty, seed, params, flags);
  std::vector<harness::AgentSpec> seats;
  seats.push_back(harness::parse_agent_spec(p1, "p1"));
  if (is_two_player(t.puzzle)) {
    if (p2.empty()) fail(ErrorCode::ConfigError, std::string(to_string(t.puzzle)) + " needs --p2");
    seats.push_back(harness::parse_agent_spec(p2, "p2"));
  } else if (!p2.empty()) {
    fail(ErrorCode::ConfigError, std::string(to_string(t.puzzle)) + " is single-player");
  }
  if (seats[0].label == "p1" && seats.size() == 1) seats[0].label = "solo";
  for (auto& s : seats) s.move_seconds = move_seconds;
  const MatchRecord record = harness::run_match(t, seats);
  if (!quiet) {
    for (const auto& step : record.trajectory) {
      std::cout << "turn " << &step - record.trajectory.data() << " " << to_string(step.mover) << " "
                << format_move(t.puzzle, step.move) << " -> " << to_json(step.feedback).dump() << "\n";
    }
  }
  std::cout << scores_text(record);
  if (!out.empty()) write_file(out, write_replay(record));
  return 0;
}

int cmd_tournament(const std::string& config_path, std::string out) {
  const auto config = harness::load_config(config_path);
  if (out.empty()) out = config.name;
  const auto result = harness::run_tournament(config);
  harness::write_outputs(result, out);
  std::cout << scoring::summary_pretty(result.means, result.elo);
  for (const auto& [game, report] : result.program) {
    std::cout << game << ": Avg " << report.avg << ", Best " << report.best << "\n";
  }
  std::cout << result.records.size() << " records written to " << out << "\n";
  return 0;
}

int cmd_score(const std::string& dir, const std::string& out, std::uint64_t elo_seed, int resamples) {
  namespace fs = std::filesystem;
  fs::path root(dir);
  if (fs::is_directory(root / "replays")) root /= "replays";
  if (!fs::is_directory(root)) fail(ErrorCode::ConfigError, dir + " is not a directory");
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.path().extension() == ".jsonl") files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) fail(ErrorCode::ConfigError, "no replay files in " + root.string());
  std::vector<MatchRecord> records;
  for (const auto& f : files) {
    try {
      records.push_back(read_replay_file(f));
    } catch (const Error& e) {
      fail(e.code(), f + ": " + e.what());
    }
  }
  const auto result = harness::analyze(std::move(records), elo_seed, resamples);
  std::cout << scoring::summary_pretty(result.means, result.elo);
  if (!out.empty()) {
    fs::create_directories(out);
    write_file((fs::path(out) / "scores.csv").string(), scoring::score_rows_csv(result.rows));
    write_file((fs::path(out) / "summary.csv").string(), scoring::summary_csv(result.means, result.elo));
    write_file((fs::path(out) / "win_matrix.csv").string(), scoring::win_matrix_csv(result.wins));
    write_file((fs::path(out) / "status.csv").string(), scoring::status_csv(result.statuses));
  }
  return 0;
}

int cmd_export(const std::string& path, const std::string& format) {
  const MatchRecord record = read_replay_file(path);
  if (format == "jsonl") {
    std::cout << write_replay(record);
    return 0;
  }
  if (format != "text") fail(ErrorCode::ConfigError, "format must be text or jsonl");
  std::cout << "template " << to_json(record.tmpl).dump() << "\n";
  GameState state = instantiate(record.tmpl);
  const Player viewer = is_two_player(record.tmpl.puzzle) ? Player::P1 : Player::Solo;
  std::cout << observe(state, viewer) << "\n";
  for (const auto& step : record.trajectory) {
    auto next = ppx::step(state, step.move);
    std::cout << "\n" << to_string(step.mover) << " plays " << format_move(record.tmpl.puzzle, step.move)
              << "\n" << to_json(next.feedback).dump() << "\n";
    state = std::move(next.state);
  }
  std::cout << "\n" << observe(state, viewer) << "\n" << scores_text(record);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Text puzzle engine, baselines and tournament harness"};
  app.require_subcommand(1);

  std::string puzzle, difficulty = "Easy", viewer, p1, p2, out, config, dir, file, format = "text";
  std::uint64_t seed = 1, elo_seed = 1;
  int resamples = ppx::scoring::kDefaultResamples;
  double move_seconds = ppx::harness::kDefaultMoveSeconds;
  std::vector<std::string> params, flags;
  bool reveal = false, quiet = false;

  auto* gen = app.add_subcommand("gen", "Generate an instance and print its observation");
  gen->add_option("puzzle", puzzle, "Puzzle name")->required();
  gen->add_option("--difficulty", difficulty, "Easy or Normal");
  gen->add_option("--seed", seed, "Instance seed");
  gen->add_option("--param", params, "Size parameter override key=value");
  gen->add_option("--flag", flags, "Rule flag");
  gen->add_option("--viewer", viewer, "P1, P2 or Solo");
  gen->add_flag("--reveal", reveal, "Also print the full hidden state");

  auto* play = app.add_subcommand("play", "Play one match");
  play->add_option("puzzle", puzzle, "Puzzle name")->required();
  play->add_option("--difficulty", difficulty, "Easy or Normal");
  play->add_option("--seed", seed, "Instance seed");
  play->add_option("--param", params, "Size parameter override key=value");
  play->add_option("--flag", flags, "Rule flag");
  play->add_option("--p1", p1, "builtin:<Policy>, builtin:table or cmd:<command>")->required();
  play->add_option("--p2", p2, "Second seat for two-player puzzles");
  play->add_option("--move-seconds", move_seconds, "Per-move limit for external agents");
  play->add_option("--out", out, "Write the replay here");
  play->add_flag("--quiet", quiet, "Only print the result");

  auto* tour = app.add_subcommand("tournament", "Run a tournament from a JSON configuration");
  tour->add_option("--config", config, "Configuration file")->required();
  tour->add_option("--out", out, "Output directory (default: configuration name)");

  auto* score = app.add_subcommand("score", "Score a directory of replays");
  score->add_option("dir", dir, "Replay directory")->required();
  score->add_option("--out", out, "Write CSV tables here");
  score->add_option("--elo-seed", elo_seed, "Match-order seed");
  score->add_option("--resamples", resamples, "Bootstrap resamples");

  auto* exp = app.add_subcommand("export-replay", "Verify a replay and print it");
  exp->add_option("file", file, "Replay file")->required();
  exp->add_option("--format", format, "text or jsonl");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (*gen) return cmd_gen(puzzle, difficulty, seed, params, flags, viewer, reveal);
    if (*play) return cmd_play(puzzle, difficulty, seed, params, flags, p1, p2, move_seconds, out, quiet);
    if (*tour) return cmd_tournament(config, out);
    if (*score) return cmd_score(dir, out, elo_seed, resamples);
    if (*exp) return cmd_export(file, format);
  } catch (const ppx::Error& e) {
    std::cerr << "ppx: " << e.what() << "\n";
    return e.code() == ppx::ErrorCode::CorruptReplay ? kExitReplay : kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "ppx: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
