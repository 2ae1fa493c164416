#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kleene {

enum class ErrorCode {
  InvalidArgument = 1,
  DuplicateLabel,
  UnknownElement,
  AntisymmetryViolation,
  EmptySubset,
  SizeLimit,
  NotComparable,
  NotInvolutive,
  NotAntitone,
  NotBounded,
  NoUniqueTop,
  NoUniqueBottom,
  NotOrderPreserving,
  HypothesisFailed,
  NotDistributive,
  NotOrtho,
  PreconditionFailed,
  NotChain,
  GapConditionFailed,
  NotKleene,
  EvenCardinality,
  NoFixedPoint,
  BadLength,
  SyntaxError,
  Io,
  Internal,
};

std::string_view error_name(ErrorCode code) noexcept;

// Every failure raised by the library. `line` is set by the file parser only.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0)
      : std::runtime_error(message), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  int line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace kleene
