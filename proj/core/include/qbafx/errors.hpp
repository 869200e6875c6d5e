#pragma once

#include <stdexcept>
#include <string>

#include "qbafx/ids.hpp"

namespace qbafx {

enum class ErrorCode {
  // construction / validation
  InvalidArgumentId,
  DuplicateArgumentId,
  UnknownEndpoint,
  PolarityConflict,
  BadBaseScore,
  SelfLoop,
  // lookups / restrictions
  UnknownArgument,
  UnknownEdge,
  DomainMismatch,
  // parsing
  ParseError,
  // truth discovery
  InconsistentSource,
  IdCollision,
  // solving
  NonConvergence,
  // attribution
  TooLargeForExact,
  TopicEqualsTarget,
  // rendering
  TargetMismatch,
};

const char* to_string(ErrorCode code);

/// Base class for every domain error thrown by the library. The code
/// discriminates programmatically; what() carries a human-readable message
/// prefixed with the code name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Thrown when the fixed-point iteration exhausts its iteration budget.
/// Carries the last sup-norm change between iterates and the last iterate
/// itself so callers can report how far from a fixed point the run stopped.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& message, double last_delta,
                      StrengthMap last_iterate);
  double last_delta() const noexcept { return last_delta_; }
  const StrengthMap& last_iterate() const noexcept { return last_iterate_; }

 private:
  double last_delta_;
  StrengthMap last_iterate_;
};

/// Thrown on malformed input documents (JSON or CSV). line() is 1-based when
/// known (-1 otherwise); field() names the offending field when applicable.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message, int line = -1,
                      std::string field = "");
  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  int line_;
  std::string field_;
};

}  // namespace qbafx
