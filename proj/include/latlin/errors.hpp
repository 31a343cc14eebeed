#pragma once

#include <stdexcept>
#include <string>

namespace latlin {

enum class ErrorCode {
  AlgebraMismatch,
  NotTotallyOrdered,
  DimensionMismatch,
  TermBudgetExceeded,
  CarrierNotFinite,
  EnumerationTooLarge,
  ParseError,
  InvalidArgument,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::AlgebraMismatch: return "ALGEBRA_MISMATCH";
    case ErrorCode::NotTotallyOrdered: return "NOT_TOTALLY_ORDERED";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::TermBudgetExceeded: return "TERM_BUDGET_EXCEEDED";
    case ErrorCode::CarrierNotFinite: return "CARRIER_NOT_FINITE";
    case ErrorCode::EnumerationTooLarge: return "ENUMERATION_TOO_LARGE";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace latlin
