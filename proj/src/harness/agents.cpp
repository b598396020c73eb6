#include "ppx/harness/agents.hpp"

#include <fcntl.h>
#include <poll.h>
#include <sched.h>
#include <signal.h>
#include <sys/resource.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <thread>

#include "ppx/core/engine.hpp"
#include "ppx/core/errors.hpp"
#include "ppx/core/rng.hpp"

namespace ppx::harness {

namespace {

constexpr std::size_t kMaxLine = 1 << 20;

double now_seconds() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

Decision failure(TerminationStatus status, std::string detail, int attempts = 0) {
  Decision d;
  d.status = status;
  d.detail = std::move(detail);
  d.attempts = attempts;
  return d;
}

}  // namespace

AgentSpec AgentSpec::builtin(std::string label, Policy policy) {
  AgentSpec s;
  s.label = std::move(label);
  s.policy = policy;
  return s;
}

AgentSpec AgentSpec::table(std::string label) {
  AgentSpec s;
  s.label = std::move(label);
  s.use_table = true;
  return s;
}

AgentSpec AgentSpec::external(std::string label, std::string command, double move_seconds) {
  AgentSpec s;
  s.kind = Kind::External;
  s.label = std::move(label);
  s.command = std::move(command);
  s.move_seconds = move_seconds;
  return s;
}

AgentSpec parse_agent_spec(const std::string& text, const std::string& label) {
  if (text.rfind("builtin:", 0) == 0) {
    const std::string name = text.substr(8);
    if (name == "table") return AgentSpec::table(label);
    auto policy = parse_policy(name);
    if (!policy) fail(ErrorCode::ConfigError, "unknown builtin policy '" + name + "'");
    return AgentSpec::builtin(label, *policy);
  }
  std::string command = text.rfind("cmd:", 0) == 0 ? text.substr(4) : text;
  if (command.empty()) fail(ErrorCode::ConfigError, "empty agent command");
  return AgentSpec::external(label, command);
}

std::unique_ptr<Agent> make_agent(const AgentSpec& spec, const PuzzleTemplate& tmpl, int seat) {
  if (spec.kind == AgentSpec::Kind::External) return std::make_unique<ExternalAgent>(spec);
  const Policy policy = spec.use_table ? table_policy(tmpl.puzzle, tmpl.difficulty) : spec.policy;
  const std::uint64_t seed =
      CounterRng::keyed({tmpl.seed, static_cast<std::uint64_t>(seat), fnv1a64(spec.label)}).next();
  return make_builtin(tmpl.puzzle, policy, seed, spec.params);
}

Decision with_format_retries(PuzzleId puzzle, const ReplySource& next, const RetryNotice& notice,
                             int max_attempts) {
  std::string last_reason;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    const Reply reply = next();
    if (reply.kind == Reply::Kind::Eof) {
      return failure(TerminationStatus::RuntimeError, "agent exited", attempt);
    }
    if (reply.kind == Reply::Kind::Timeout) {
      return failure(TerminationStatus::Timeout, "move time limit exceeded", attempt);
    }
    std::string reason;
    const auto j = nlohmann::json::parse(reply.text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      reason = "reply is not a JSON object";
    } else if (!j.contains("type") || j["type"] != "move") {
      reason = "expected a message of type move";
    } else if (!j.contains("payload") || !j["payload"].is_string()) {
      reason = "move payload must be a string";
    } else if (auto move = parse_move(puzzle, j["payload"].get<std::string>())) {
      Decision d;
      d.move = std::move(*move);
      d.attempts = attempt;
      return d;
    } else {
      reason = "move does not match the grammar";
    }
    last_reason = reason;
    if (notice && attempt < max_attempts) notice(attempt, reason);
  }
  return failure(TerminationStatus::NotFollowInstruction,
                 "no valid move after " + std::to_string(max_attempts) + " attempts: " + last_reason,
                 max_attempts);
}

ExternalAgent::ExternalAgent(AgentSpec spec) : spec_(std::move(spec)) {}

ExternalAgent::~ExternalAgent() { shutdown(); }

void ExternalAgent::start_match(const GameState& initial, Player seat) {
  seat_ = seat;
  int fds[2];
  if (::socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, fds) != 0) {
    start_failure_ = failure(TerminationStatus::SyntaxError, "socketpair failed");
    return;
  }
  // Built before fork: the child must not allocate.
  const std::string command = "exec " + spec_.command;
  const pid_t pid = ::fork();
  if (pid < 0) {
    ::close(fds[0]);
    ::close(fds[1]);
    start_failure_ = failure(TerminationStatus::SyntaxError, "fork failed");
    return;
  }
  if (pid == 0) {
    ::setpgid(0, 0);
    rlimit cpu{static_cast<rlim_t>(spec_.cpu_seconds), static_cast<rlim_t>(spec_.cpu_seconds)};
    ::setrlimit(RLIMIT_CPU, &cpu);
    ::unshare(CLONE_NEWNET);  // needs privileges; ignored when refused
    ::dup2(fds[1], STDIN_FILENO);
    ::dup2(fds[1], STDOUT_FILENO);
    const int devnull = ::open("/dev/null", O_WRONLY);
    if (devnull >= 0) ::dup2(devnull, STDERR_FILENO);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::setpgid(pid, pid);
  ::close(fds[1]);
  fd_ = fds[0];
  pid_ = pid;

  nlohmann::json init;
  init["puzzle"] = std::string(to_string(initial.puzzle()));
  init["difficulty"] = std::string(to_string(initial.tmpl.difficulty));
  init["seat"] = std::string(to_string(seat));
  init["players"] = traits(initial.puzzle()).players;
  init["size_params"] = initial.tmpl.size_params;
  init["rule_flags"] = initial.tmpl.rule_flags;
  init["grammar"] = rules_for(initial.puzzle()).move_grammar();
  init["move_seconds"] = spec_.move_seconds;
  if (!send("match-init", init)) {
    start_failure_ = failure(TerminationStatus::SyntaxError, "agent did not start");
    return;
  }
  const Reply reply = read_line(now_seconds() + spec_.move_seconds);
  if (reply.kind == Reply::Kind::Eof) {
    start_failure_ = failure(TerminationStatus::SyntaxError, "agent exited before ready");
  } else if (reply.kind == Reply::Kind::Timeout) {
    start_failure_ = failure(TerminationStatus::Timeout, "no ready message in time");
  } else {
    const auto j = nlohmann::json::parse(reply.text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || j.value("type", "") != "ready") {
      start_failure_ = failure(TerminationStatus::NotFollowInstruction, "expected a ready message");
    }
  }
}

Decision ExternalAgent::decide(const GameState& state) {
  if (start_failure_) return *start_failure_;
  if (dead_) return *dead_;
  nlohmann::json obs;
  obs["turn"] = state.turn_index;
  obs["text"] = observe(state, seat_);
  if (spec_.legal_hints) {
    const MoveList legal = legal_moves(state);
    if (!legal.truncated) {
      nlohmann::json list = nlohmann::json::array();
      for (const Move& m : legal.moves) list.push_back(format_move(state.puzzle(), m));
      obs["legal_moves"] = list;
    }
  }
  if (!send("observation", obs)) {
    dead_ = failure(TerminationStatus::RuntimeError, "agent closed its input");
    return *dead_;
  }
  const double deadline = now_seconds() + spec_.move_seconds;
  Decision d = with_format_retries(
      state.puzzle(), [&] { return read_line(deadline); },
      [&](int attempt, const std::string& reason) {
        send("retry", {{"reason", reason}, {"attempts_left", kFormatAttempts - attempt}});
      });
  if (!d.move) dead_ = d;
  return d;
}

void ExternalAgent::notify(const Feedback& feedback, const GameState& after) {
  (void)after;
  if (!dead_) send("feedback", to_json(feedback));
}

void ExternalAgent::end_match(const GameState& final_state) {
  if (fd_ >= 0 && !dead_ && !start_failure_) {
    send("end", final_state.outcome ? to_json(*final_state.outcome) : nlohmann::json(nullptr));
  }
  shutdown();
}

bool ExternalAgent::send(const std::string& type, const nlohmann::json& payload) {
  if (fd_ < 0) return false;
  const std::string line = nlohmann::json{{"type", type}, {"payload", payload}}.dump() + "\n";
  std::size_t off = 0;
  while (off < line.size()) {
    const ssize_t n = ::send(fd_, line.data() + off, line.size() - off, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      return false;
    }
    off += static_cast<std::size_t>(n);
  }
  return true;
}

Reply ExternalAgent::read_line(double deadline) {
  if (fd_ < 0) return {Reply::Kind::Eof, {}};
  for (;;) {
    if (auto nl = buffer_.find('\n'); nl != std::string::npos) {
      Reply r{Reply::Kind::Line, buffer_.substr(0, nl)};
      buffer_.erase(0, nl + 1);
      if (!r.text.empty() && r.text.back() == '\r') r.text.pop_back();
      return r;
    }
    if (buffer_.size() > kMaxLine) {
      Reply r{Reply::Kind::Line, "<oversized line>"};
      buffer_.clear();
      return r;
    }
    const double left = deadline - now_seconds();
    if (left <= 0) return {Reply::Kind::Timeout, {}};
    pollfd p{fd_, POLLIN, 0};
    const int rc = ::poll(&p, 1, static_cast<int>(left * 1000.0) + 1);
    if (rc < 0 && errno == EINTR) continue;
    if (rc == 0) continue;
    char chunk[4096];
    const ssize_t n = ::read(fd_, chunk, sizeof chunk);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) return {Reply::Kind::Eof, {}};
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

void ExternalAgent::shutdown() {
  if (fd_ >= 0) {
    ::shutdown(fd_, SHUT_WR);
  }
  if (pid_ > 0) {
    // Short grace period for an orderly exit, then the whole group goes.
    int status = 0;
    bool reaped = false;
    for (int i = 0; i < 20 && !reaped; ++i) {
      if (::waitpid(pid_, &status, WNOHANG) == pid_) {
        reaped = true;
      } else {
        std::this_thread::sleep_for(std::chrono::milliseconds(10));
      }
    }
    ::kill(-pid_, SIGKILL);
    if (!reaped) ::waitpid(pid_, &status, 0);
    pid_ = -1;
  }
  if (fd_ >= 0) {
    ::close(fd_);
    fd_ = -1;
  }
}

}  // namespace ppx::harness
