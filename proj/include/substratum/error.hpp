#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace substratum {

enum class ErrorCode {
    InvalidInput,
    RuleLengthMismatch,
    UnknownLetter,
    BadSeed,
    SeedMissing,
    DigitOutOfRange,
    Overflow,
    BadBase,
    NonCanonical,
    NoNegativeSide,
    StateExplosion,
    WindowTooShort,
    IndexOutOfWindow,
    InvariantViolation,
    NotToeplitz,
    NontrivialHeight,
    NotPrimitive,
    Periodic,
};

std::string_view to_string(ErrorCode code);

/// Analysis refusals (the input is well-formed but a precondition of the
/// analysis does not hold) as opposed to malformed input.
bool is_refusal(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace substratum
