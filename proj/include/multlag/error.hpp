#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace multlag {

enum class ErrorCode {
  NonPositiveLambda,
  SpeedLimitExceeded,
  DomainError,
  UnsupportedOperation,
  DegenerateHessian,
  DegenerateEnergy,
  GridMismatch,
  Overflow,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveLambda: return "NonPositiveLambda";
    case ErrorCode::SpeedLimitExceeded: return "SpeedLimitExceeded";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::UnsupportedOperation: return "UnsupportedOperation";
    case ErrorCode::DegenerateHessian: return "DegenerateHessian";
    case ErrorCode::DegenerateEnergy: return "DegenerateEnergy";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace multlag
