#pragma once

#include <functional>
#include <memory>
#include <string>

#include "ppx/strategies/agent.hpp"

namespace ppx::harness {

inline constexpr int kFormatAttempts = 5;
inline constexpr double kDefaultMoveSeconds = 30.0;

// How a seat is filled. A builtin with `use_table` picks the table policy
// for the puzzle and difficulty being played.
struct AgentSpec {
  enum class Kind { Builtin, External };
  Kind kind = Kind::Builtin;
  std::string label;
  Policy policy = Policy::Random;
  bool use_table = false;
  StrategyParams params;
  std::string command;  // External: run through /bin/sh
  double move_seconds = kDefaultMoveSeconds;
  int cpu_seconds = 600;  // RLIMIT_CPU for the whole session
  bool legal_hints = true;  // list legal moves in observations when enumerable

  static AgentSpec builtin(std::string label, Policy policy);
  static AgentSpec table(std::string label);
  static AgentSpec external(std::string label, std::string command,
                            double move_seconds = kDefaultMoveSeconds);
};

// "builtin:<Policy>", "builtin:table" or "cmd:<shell command>"; anything
// else is taken as a shell command. Throws ConfigError.
AgentSpec parse_agent_spec(const std::string& text, const std::string& label);

// Builtin agents are seeded from (match seed, seat) so a match replays
// identically.
std::unique_ptr<Agent> make_agent(const AgentSpec& spec, const PuzzleTemplate& tmpl, int seat);

struct Reply {
  enum class Kind { Line, Eof, Timeout };
  Kind kind = Kind::Line;
  std::string text;
};

using ReplySource = std::function<Reply()>;
using RetryNotice = std::function<void(int attempt, const std::string& reason)>;

// Reads reply lines until one parses as {"type":"move","payload":<move>}
// under the puzzle's grammar. Unparseable replies trigger `notice` and
// another attempt; after max_attempts failures the result carries
// NotFollowInstruction. EOF maps to RuntimeError, a missed deadline to
// Timeout.
Decision with_format_retries(PuzzleId puzzle, const ReplySource& next, const RetryNotice& notice = {},
                             int max_attempts = kFormatAttempts);

// Subprocess agent speaking line-delimited JSON {type, payload} on its
// standard input and output.
//   engine -> agent: match-init, observation, retry, feedback, end
//   agent -> engine: ready (once), move
// The process runs in its own process group with a CPU-time limit and, where
// the kernel allows it, without network access. This is isolation against
// accidents, not a security boundary.
class ExternalAgent : public Agent {
 public:
  explicit ExternalAgent(AgentSpec spec);
  ~ExternalAgent() override;
  ExternalAgent(const ExternalAgent&) = delete;
  ExternalAgent& operator=(const ExternalAgent&) = delete;

  std::string label() const override { return spec_.label; }
  void start_match(const GameState& initial, Player seat) override;
  std::optional<Decision> start_failure() const override { return start_failure_; }
  Decision decide(const GameState& state) override;
  void notify(const Feedback& feedback, const GameState& after) override;
  void end_match(const GameState& final_state) override;

 private:
  bool send(const std::string& type, const nlohmann::json& payload);
  Reply read_line(double deadline);
  void shutdown();

  AgentSpec spec_;
  Player seat_ = Player::P1;
  int fd_ = -1;
  int pid_ = -1;
  std::string buffer_;
  std::optional<Decision> start_failure_;
  std::optional<Decision> dead_;  // sticky failure once the process is gone
};

}  // namespace ppx::harness
