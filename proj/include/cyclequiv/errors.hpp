#pragma once

#include <stdexcept>
#include <string>

namespace cyclequiv {

enum class ErrorCode {
    NotPrime,
    ReducibleModulus,
    DegreeMismatch,
    ZeroInverse,
    FieldMismatch,
    DivisionByZeroPoly,
    BothZero,
    LengthMismatch,
    NotCoprime,
    NotACoset,
    NotADivisor,
    TooManyCodes,
    NotAUnit,
    NotSemisimple,
    CapExceeded,
    NotASubgroup,
    PreconditionFailed,
    NotAnElement,
    NotInvariant,
    SolverInconsistent,
    GroupMismatch,
    InvalidInput,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace cyclequiv
