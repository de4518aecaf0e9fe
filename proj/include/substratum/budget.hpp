#pragma once

#include <cstddef>

namespace substratum {

/// Size limits for the constructions that can blow up.
struct Budget {
    /// Maximum image-word length ℓ^n accepted by power().
    std::size_t word_length = 1'000'000;
    /// Maximum number of letters in an oracle window.
    std::size_t window_letters = 128'000'000;
    /// Maximum number of semigroup elements / automaton states / subset layers.
    std::size_t states = 1'000'000;

    /// Defaults, with SUBSTRATUM_BUDGET=N scaling all limits from a word budget of N.
    static Budget from_env();
};

} // namespace substratum
