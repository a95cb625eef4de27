#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace degree_game {

enum class ErrorCode {
  DuplicateEdge,
  DegreeCapExceeded,
  SelfLoop,
  OutOfRange,
  NotAComponent,
  TooLarge,
  BadOpening,
  IllegalReply,
  NoPathState,
  NoLegalMove,
  StrategyBreak,
  NoValidPairing,
  UnmatchedPosition,
  IllegalMoveByOpponent,
  ScriptExhausted,
  ParseError,
  ReplayMismatch,
  InvalidConfig,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace degree_game
