#pragma once

#include <stdexcept>
#include <string>

namespace nonloc {

enum class ErrorCode {
    AllZero,
    NegativeWeight,
    BadWeights,
    InconsistentState,
    ParseError,
    BadArgument,
    NotHermitian,
    DegenerateClustering,
    DimensionMismatch,
    EquivalenceViolation,
    Internal,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception: a code for programmatic dispatch plus a message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace nonloc
