#pragma once

#include <stdexcept>
#include <string>

namespace steinhaus {

enum class ErrorCode {
  InvalidResidue,
  InvalidArgument,
  MismatchedSides,
  EmptyTuple,
  TooLarge,
  NotPeriodic,
  PeriodNotDivisibleBy4,
  UnbalancedPeriod,
  InvalidSpec,
  WindowTooLarge,
};

const char* to_string(ErrorCode code) noexcept;

/// Every library failure is reported through this exception type; the code
/// identifies which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace steinhaus
