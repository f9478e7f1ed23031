#pragma once

#include <stdexcept>
#include <string>

namespace starsurgery {

enum class ErrorCode {
  SingularMatrix,
  NotSymmetric,
  DimensionMismatch,
  InadmissibleParams,
  NotNegativeDefinite,
  UnsupportedShape,
  EnumerationBudgetExceeded,
  EmptySubset,
  HoleCountMismatch,
  BadHole,
  PatternNotFound,
  UnknownRelation,
  WallAmbiguity,
  NotACycle,
  SyntaxError,
  SchemaError,
  UnknownCommand,
};

const char* error_code_name(ErrorCode c);

/// All library failures carry a machine-readable code plus a human message.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InadmissibleParams: return "InadmissibleParams";
    case ErrorCode::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::HoleCountMismatch: return "HoleCountMismatch";
    case ErrorCode::BadHole: return "BadHole";
    case ErrorCode::PatternNotFound: return "PatternNotFound";
    case ErrorCode::UnknownRelation: return "UnknownRelation";
    case ErrorCode::WallAmbiguity: return "WallAmbiguity";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::UnknownCommand: return "UnknownCommand";
  }
  return "Error";
}

}  // namespace starsurgery
