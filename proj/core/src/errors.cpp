#include "qbafx/errors.hpp"

#include <utility>

namespace qbafx {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgumentId: return "InvalidArgumentId";
    case ErrorCode::DuplicateArgumentId: return "DuplicateArgumentId";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::PolarityConflict: return "PolarityConflict";
    case ErrorCode::BadBaseScore: return "BadBaseScore";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::UnknownArgument: return "UnknownArgument";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InconsistentSource: return "InconsistentSource";
    case ErrorCode::IdCollision: return "IdCollision";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::TooLargeForExact: return "TooLargeForExact";
    case ErrorCode::TopicEqualsTarget: return "TopicEqualsTarget";
    case ErrorCode::TargetMismatch: return "TargetMismatch";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

NonConvergenceError::NonConvergenceError(const std::string& message,
                                         double last_delta,
                                         StrengthMap last_iterate)
    : Error(ErrorCode::NonConvergence, message),
      last_delta_(last_delta),
      last_iterate_(std::move(last_iterate)) {}

ParseError::ParseError(const std::string& message, int line, std::string field)
    : Error(ErrorCode::ParseError, message),
      line_(line),
      field_(std::move(field)) {}

}  // namespace qbafx
