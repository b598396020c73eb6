#pragma once

#include <vector>

#include "ppx/core/record.hpp"
#include "ppx/harness/agents.hpp"

namespace ppx::harness {

struct MatchOptions {
  int max_turns = 100000;  // guard against non-terminating rule bugs
};

// Drives observe -> agent -> step until the game ends or a seat forfeits.
// Agent failures become statuses; nothing an agent does aborts the match.
// Throws InvalidInput when the seat count does not match the puzzle.
MatchRecord run_match(const PuzzleTemplate& tmpl, const std::vector<Agent*>& agents,
                      const std::vector<std::string>& labels, const MatchOptions& options = {});

MatchRecord run_match(const PuzzleTemplate& tmpl, const std::vector<AgentSpec>& seats,
                      const MatchOptions& options = {});

struct MatchJob {
  PuzzleTemplate tmpl;
  std::vector<AgentSpec> seats;
};

// Runs jobs on `threads` workers; records come back in job order.
std::vector<MatchRecord> run_jobs(const std::vector<MatchJob>& jobs, int threads = 1,
                                  const MatchOptions& options = {});

}  // namespace ppx::harness
