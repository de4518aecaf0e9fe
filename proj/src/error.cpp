#include "substratum/error.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

#include "substratum/budget.hpp"

namespace substratum {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::RuleLengthMismatch: return "RuleLengthMismatch";
    case ErrorCode::UnknownLetter: return "UnknownLetter";
    case ErrorCode::BadSeed: return "BadSeed";
    case ErrorCode::SeedMissing: return "SeedMissing";
    case ErrorCode::DigitOutOfRange: return "DigitOutOfRange";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::BadBase: return "BadBase";
    case ErrorCode::NonCanonical: return "NonCanonical";
    case ErrorCode::NoNegativeSide: return "NoNegativeSide";
    case ErrorCode::StateExplosion: return "StateExplosion";
    case ErrorCode::WindowTooShort: return "WindowTooShort";
    case ErrorCode::IndexOutOfWindow: return "IndexOutOfWindow";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::NotToeplitz: return "NotToeplitz";
    case ErrorCode::NontrivialHeight: return "NontrivialHeight";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::Periodic: return "Periodic";
    }
    return "Unknown";
}

bool is_refusal(ErrorCode code) {
    return code == ErrorCode::NotToeplitz || code == ErrorCode::NontrivialHeight ||
           code == ErrorCode::NotPrimitive || code == ErrorCode::Periodic;
}

Budget Budget::from_env() {
    Budget b;
    const char* env = std::getenv("SUBSTRATUM_BUDGET");
    if (env == nullptr) return b;
    std::size_t value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || value == 0)
        throw Error(ErrorCode::InvalidInput, "SUBSTRATUM_BUDGET must be a positive integer");
    b.word_length = value;
    b.window_letters = value * 128;
    b.states = value;
    return b;
}

} // namespace substratum
