#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace algstat {

enum class ErrorCode {
  DuplicateName,
  RingMismatch,
  ParseError,
  UnknownVariable,
  ZeroSaturand,
  DegreeBudgetExceeded,
  SelfLoop,
  DuplicateEdge,
  OverlappingSets,
  CyclicGraph,
  AdjacentPair,
  NotLevelOne,
  MultipleRoots,
  UnsupportedGraphKind,
  IndexOutOfRange,
  MissingLabel,
  UnsupportedAlgorithm,
  InvalidTemplate,
  NoSuchEdge,
  NotHybridEdge,
  SymmetryViolation,
  NotGroupBased,
  ZeroImage,
  UnknownType,
  SchemaMismatch,
  IoError,
};

std::string_view error_name(ErrorCode code) noexcept;

// All domain failures surface as this exception; `code()` drives the CLI exit
// status and test expectations.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace algstat
