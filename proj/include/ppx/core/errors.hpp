#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ppx {

enum class ErrorCode {
  InvalidTemplate,
  VariantMismatch,
  SteppedFinishedGame,
  UnterminatedTrajectory,
  CorruptReplay,
  BudgetExhausted,
  IndexOutOfRange,
  HoldNotAbove,
  CapExceeded,
  MalformedAnswer,
  DuplicateEdge,
  SelfLoop,
  DimensionMismatch,
  GameUnfinished,
  NoBoxesLeft,
  CardNotHeld,
  EmptyBag,
  NoPicksLeft,
  NoLegalMoves,
  StochasticPuzzleRejected,
  InvalidMove,
  InvalidInput,
  ConfigError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace ppx
