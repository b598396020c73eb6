#include "ppx/core/record.hpp"

#include <sstream>

#include "ppx/core/engine.hpp"
#include "ppx/core/errors.hpp"

namespace ppx {

namespace {

bool complete(const MatchRecord& record) {
  return record.forfeit || (!record.trajectory.empty() && record.trajectory.back().feedback.terminated);
}

nlohmann::json optional_scores(const std::vector<std::optional<double>>& scores) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& s : scores) j.push_back(s ? nlohmann::json(*s) : nlohmann::json(nullptr));
  return j;
}

[[noreturn]] void corrupt(const std::string& what) { fail(ErrorCode::CorruptReplay, what); }

}  // namespace

std::vector<std::optional<double>> evaluate(const MatchRecord& record) {
  const PuzzleId puzzle = record.tmpl.puzzle;
  if (record.forfeit) {
    if (!is_two_player(puzzle)) return {std::nullopt};
    return raw_scores(puzzle, Outcome::win(opponent(record.forfeit->player)));
  }
  if (record.trajectory.empty() || !record.trajectory.back().feedback.terminated) {
    fail(ErrorCode::UnterminatedTrajectory, "the trajectory has not terminated");
  }
  return raw_scores(puzzle, *record.trajectory.back().feedback.outcome);
}

std::vector<TerminationStatus> derive_statuses(const MatchRecord& record) {
  const PuzzleId puzzle = record.tmpl.puzzle;
  std::vector<TerminationStatus> statuses(static_cast<std::size_t>(traits(puzzle).players),
                                          TerminationStatus::Legal);
  if (record.forfeit) {
    statuses[static_cast<std::size_t>(seat_index(record.forfeit->player))] = record.forfeit->status;
    return statuses;
  }
  if (record.trajectory.empty()) return statuses;
  const TrajectoryStep& last = record.trajectory.back();
  if (!last.feedback.terminated) return statuses;
  auto& mover = statuses[static_cast<std::size_t>(seat_index(last.mover))];
  if (last.feedback.legality == Feedback::Legality::Malformed) {
    mover = TerminationStatus::NotFollowInstruction;
  } else if (last.feedback.legality == Feedback::Legality::Illegal &&
             !(is_two_player(puzzle) && rules_for(puzzle).illegal_move_passes())) {
    mover = TerminationStatus::RuleViolation;
  }
  return statuses;
}

std::string write_replay(const MatchRecord& record) {
  const PuzzleId puzzle = record.tmpl.puzzle;
  std::ostringstream out;
  nlohmann::json header;
  header["kind"] = "header";
  header["version"] = std::string(kReplayVersion);
  header["template"] = to_json(record.tmpl);
  header["participants"] = record.participants;
  out << header.dump() << '\n';
  for (std::size_t i = 0; i < record.trajectory.size(); ++i) {
    const TrajectoryStep& s = record.trajectory[i];
    nlohmann::json line;
    line["kind"] = "step";
    line["turn"] = i;
    line["player"] = std::string(to_string(s.mover));
    line["state"] = hash_hex(s.state_hash);
    line["move"] = format_move(puzzle, s.move);
    line["feedback"] = to_json(s.feedback);
    out << line.dump() << '\n';
  }
  nlohmann::json result;
  result["kind"] = "result";
  result["forfeit"] = nullptr;
  if (record.forfeit) {
    result["forfeit"] = {{"player", std::string(to_string(record.forfeit->player))},
                         {"status", std::string(to_string(record.forfeit->status))},
                         {"detail", record.forfeit->detail}};
  }
  nlohmann::json statuses = nlohmann::json::array();
  for (auto s : record.statuses) statuses.push_back(std::string(to_string(s)));
  result["statuses"] = statuses;
  result["raw_scores"] = optional_scores(record.raw_scores);
  out << result.dump() << '\n';
  return out.str();
}

MatchRecord read_replay(std::string_view text) {
  MatchRecord record;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  bool saw_result = false;
  try {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      if (saw_result) corrupt("content after the result line");
      const auto j = nlohmann::json::parse(line);
      const std::string kind = j.at("kind").get<std::string>();
      if (kind == "header") {
        if (saw_header) corrupt("duplicate header");
        if (j.at("version").get<std::string>() != kReplayVersion) corrupt("unsupported replay version");
        record.tmpl = template_from_json(j.at("template"));
        record.participants = j.at("participants").get<std::vector<std::string>>();
        saw_header = true;
      } else if (kind == "step") {
        if (!saw_header) corrupt("step before header");
        if (j.at("turn").get<std::size_t>() != record.trajectory.size()) corrupt("turn numbers out of order");
        TrajectoryStep s;
        auto mover = parse_player(j.at("player").get<std::string>());
        if (!mover) corrupt("unknown player");
        s.mover = *mover;
        s.state_hash = std::stoull(j.at("state").get<std::string>(), nullptr, 16);
        auto move = parse_move(record.tmpl.puzzle, j.at("move").get<std::string>());
        if (!move) corrupt("unparseable move on line " + std::to_string(line_no));
        s.move = *move;
        s.feedback = feedback_from_json(j.at("feedback"));
        record.trajectory.push_back(std::move(s));
      } else if (kind == "result") {
        if (!saw_header) corrupt("result before header");
        const auto& f = j.at("forfeit");
        if (!f.is_null()) {
          auto p = parse_player(f.at("player").get<std::string>());
          auto st = parse_status(f.at("status").get<std::string>());
          if (!p || !st) corrupt("bad forfeit entry");
          record.forfeit = Forfeit{*p, *st, f.at("detail").get<std::string>()};
        }
        for (const auto& s : j.at("statuses")) {
          auto st = parse_status(s.get<std::string>());
          if (!st) corrupt("unknown status");
          record.statuses.push_back(*st);
        }
        for (const auto& s : j.at("raw_scores")) {
          record.raw_scores.push_back(s.is_null() ? std::nullopt : std::optional<double>(s.get<double>()));
        }
        saw_result = true;
      } else {
        corrupt("unknown line kind '" + kind + "'");
      }
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CorruptReplay) throw;
    corrupt(std::string("line ") + std::to_string(line_no) + ": " + e.what());
  } catch (const std::exception& e) {
    corrupt(std::string("line ") + std::to_string(line_no) + ": " + e.what());
  }
  if (!saw_header) corrupt("missing header");
  if (!saw_result) corrupt("missing result line");
  return record;
}

GameState resimulate(const MatchRecord& record) {
  GameState state = instantiate(record.tmpl);
  for (const TrajectoryStep& s : record.trajectory) state = step(state, s.move).state;
  return state;
}

void verify_replay(const MatchRecord& record) {
  GameState state;
  try {
    state = instantiate(record.tmpl);
  } catch (const Error& e) {
    corrupt(std::string("template does not instantiate: ") + e.what());
  }
  for (std::size_t i = 0; i < record.trajectory.size(); ++i) {
    const TrajectoryStep& s = record.trajectory[i];
    const std::string at = "step " + std::to_string(i) + ": ";
    if (state.finished()) corrupt(at + "game already finished");
    if (state_hash(state) != s.state_hash) corrupt(at + "state hash differs");
    if (state.active_player != s.mover) corrupt(at + "mover differs");
    if (!move_matches(state.puzzle(), s.move)) corrupt(at + "move of the wrong puzzle");
    StepResult r = step(state, s.move);
    if (!(r.feedback == s.feedback)) corrupt(at + "feedback differs");
    state = std::move(r.state);
  }
  if (!record.statuses.empty() && record.statuses != derive_statuses(record)) corrupt("statuses differ");
  if (complete(record)) {
    if (record.raw_scores != evaluate(record)) corrupt("raw scores differ");
  } else if (!record.raw_scores.empty()) {
    corrupt("raw scores recorded for an unfinished match");
  }
}

MatchRecord replay_roundtrip(const MatchRecord& record) {
  MatchRecord back = read_replay(write_replay(record));
  verify_replay(back);
  return back;
}

}  // namespace ppx
