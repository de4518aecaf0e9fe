#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "substratum/column_map.hpp"
#include "substratum/digits.hpp"

namespace substratum {

using StateId = std::uint32_t;

enum class Reading { direct, reverse };

std::string_view to_string(Reading r);

/// Deterministic finite automaton with output over the digits {0,…,ℓ−1}.
///
/// The non-negative side starts at initial_nonneg and outputs through
/// output_nonneg; a two-sided machine additionally starts negative indices at
/// initial_neg and outputs through output_neg. Negative indices are fed their
/// canonical word "ℓ−1 n_k … n_0", in the order given by `reading`.
struct Dfao {
    unsigned base = 2;
    Reading reading = Reading::direct;
    std::vector<std::string> state_names;
    /// Row-major: delta[s * base + d].
    std::vector<StateId> delta;
    StateId initial_nonneg = 0;
    std::optional<StateId> initial_neg;
    Alphabet output_alphabet;
    std::vector<Letter> output_nonneg;
    /// Empty for one-sided machines.
    std::vector<Letter> output_neg;

    std::size_t size() const noexcept { return state_names.size(); }
    bool two_sided() const noexcept { return initial_neg.has_value(); }
    StateId next(StateId s, Digit d) const { return delta[s * base + d]; }

    /// Throws InvalidInput when the structural invariants are broken.
    void check() const;
};

/// State reached from `from` after feeding ds's digits in the machine's reading order.
StateId walk(const Dfao& m, StateId from, const DigitString& ds);

/// u_n. Throws NoNegativeSide for n < 0 on a one-sided machine.
Letter run(const Dfao& m, Index n);

/// Output for an explicit (possibly padded) digit string.
Letter run_digits(const Dfao& m, const DigitString& ds);

} // namespace substratum
