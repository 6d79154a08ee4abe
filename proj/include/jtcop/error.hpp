#pragma once

#include <stdexcept>
#include <string>

namespace jtcop {

enum class ErrorCode {
  // csv / ingestion
  ParseError,
  RaggedRows,
  NonFinite,
  // partitioning
  IndivisibleN,
  DuplicateValues,
  UncoveredValue,
  NonMonotoneEdges,
  PartitionKindMismatch,
  // tables
  EmptyScope,
  ScopeNotSubset,
  OffGridPoint,
  InconsistentMarginals,
  ScopeMismatch,
  // structure search
  SingleVariable,
  TooFewVariables,
  // model
  InvalidStructure,
  ZeroModelMass,
  MissingPartitions,
  SchemaMismatch,
  CorruptFile,
  // generator / config
  BadSpec,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RaggedRows: return "RaggedRows";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::IndivisibleN: return "IndivisibleN";
    case ErrorCode::DuplicateValues: return "DuplicateValues";
    case ErrorCode::UncoveredValue: return "UncoveredValue";
    case ErrorCode::NonMonotoneEdges: return "NonMonotoneEdges";
    case ErrorCode::PartitionKindMismatch: return "PartitionKindMismatch";
    case ErrorCode::EmptyScope: return "EmptyScope";
    case ErrorCode::ScopeNotSubset: return "ScopeNotSubset";
    case ErrorCode::OffGridPoint: return "OffGridPoint";
    case ErrorCode::InconsistentMarginals: return "InconsistentMarginals";
    case ErrorCode::ScopeMismatch: return "ScopeMismatch";
    case ErrorCode::SingleVariable: return "SingleVariable";
    case ErrorCode::TooFewVariables: return "TooFewVariables";
    case ErrorCode::InvalidStructure: return "InvalidStructure";
    case ErrorCode::ZeroModelMass: return "ZeroModelMass";
    case ErrorCode::MissingPartitions: return "MissingPartitions";
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
    case ErrorCode::CorruptFile: return "CorruptFile";
    case ErrorCode::BadSpec: return "BadSpec";
  }
  return "UnknownError";
}

/// Library error carrying a machine-checkable code plus a human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

  /// True for failures that indicate a broken internal invariant rather than
  /// bad input (the CLI maps these to exit code 3 instead of 2).
  bool internal() const { return code_ == ErrorCode::ZeroModelMass; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace jtcop
