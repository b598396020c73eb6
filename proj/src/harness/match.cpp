#include "ppx/harness/match.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "ppx/core/engine.hpp"
#include "ppx/core/errors.hpp"

namespace ppx::harness {

MatchRecord run_match(const PuzzleTemplate& tmpl, const std::vector<Agent*>& agents,
                      const std::vector<std::string>& labels, const MatchOptions& options) {
  const int players = traits(tmpl.puzzle).players;
  if (static_cast<int>(agents.size()) != players || labels.size() != agents.size()) {
    fail(ErrorCode::InvalidInput, std::string(to_string(tmpl.puzzle)) + " needs " +
                                      std::to_string(players) + " agent(s)");
  }
  const auto started = std::chrono::steady_clock::now();
  MatchRecord record;
  record.tmpl = tmpl;
  record.participants = labels;
  GameState state = instantiate(tmpl);

  for (int seat = 0; seat < players; ++seat) {
    agents[static_cast<std::size_t>(seat)]->start_match(state, seat_player(tmpl.puzzle, seat));
  }
  for (int seat = 0; seat < players && !record.forfeit; ++seat) {
    if (auto f = agents[static_cast<std::size_t>(seat)]->start_failure()) {
      record.forfeit = Forfeit{seat_player(tmpl.puzzle, seat), f->status, f->detail};
    }
  }

  while (!record.forfeit && !state.finished()) {
    if (state.turn_index >= options.max_turns) {
      fail(ErrorCode::InvalidInput, "match exceeded the turn guard");
    }
    const Player mover = state.active_player;
    Agent& agent = *agents[static_cast<std::size_t>(seat_index(mover))];
    Decision d;
    try {
      d = agent.decide(state);
    } catch (const std::exception& e) {
      d = Decision{};
      d.status = TerminationStatus::RuntimeError;
      d.detail = e.what();
    }
    if (!d.move) {
      record.forfeit = Forfeit{mover, d.status, d.detail};
      break;
    }
    StepResult result = step(state, *d.move);
    record.trajectory.push_back({state_hash(state), mover, *d.move, result.feedback});
    agent.notify(result.feedback, result.state);
    state = std::move(result.state);
  }

  for (Agent* a : agents) a->end_match(state);
  record.statuses = derive_statuses(record);
  record.raw_scores = evaluate(record);
  record.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return record;
}

MatchRecord run_match(const PuzzleTemplate& tmpl, const std::vector<AgentSpec>& seats,
                      const MatchOptions& options) {
  std::vector<std::unique_ptr<Agent>> owned;
  std::vector<Agent*> agents;
  std::vector<std::string> labels;
  for (std::size_t seat = 0; seat < seats.size(); ++seat) {
    owned.push_back(make_agent(seats[seat], tmpl, static_cast<int>(seat)));
    agents.push_back(owned.back().get());
    labels.push_back(seats[seat].label);
  }
  return run_match(tmpl, agents, labels, options);
}

std::vector<MatchRecord> run_jobs(const std::vector<MatchJob>& jobs, int threads,
                                  const MatchOptions& options) {
  std::vector<MatchRecord> records(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        records[i] = run_match(jobs[i].tmpl, jobs[i].seats, options);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = jobs.size();
      }
    }
  };
  const int n = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return records;
}

}  // namespace ppx::harness
