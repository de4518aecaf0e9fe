#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace substratum {

using Digit = std::uint32_t;
using Index = std::int64_t;

enum class Sign { nonneg, neg };

/// A base-ℓ digit word, most significant digit first.
///
/// Non-negative strings are ordinary expansions (empty for zero). Negative
/// strings abbreviate the left-infinite word (ℓ−1)^∞ d_k…d_0: in canonical form
/// the first digit is a single ℓ−1 marker, followed by a block whose first digit
/// is not ℓ−1 (the block is empty for −1).
struct DigitString {
    std::vector<Digit> digits;
    Sign sign = Sign::nonneg;

    bool operator==(const DigitString&) const = default;
};

/// Canonical expansion of n. Throws BadBase when base < 2.
DigitString to_digits(Index n, unsigned base);

/// Inverse of to_digits. Throws NonCanonical for padded or malformed strings.
Index to_int(const DigitString& ds, unsigned base);

/// Value of a possibly padded string (leading zeros / leading ℓ−1 digits allowed).
Index padded_value(const DigitString& ds, unsigned base);

bool is_canonical(const DigitString& ds, unsigned base);

/// Left-pads with 0 (nonneg) or ℓ−1 (neg) to total length k.
DigitString pad(const DigitString& ds, std::size_t k, unsigned base);

/// |n|_ℓ: number of digits of a non-negative n; for negative n, the length of
/// the block after the marker (so |−1|_ℓ = 0).
std::size_t digit_length(Index n, unsigned base);

/// "11", "~3·", "~1·011"; digits are comma-separated when base > 10.
std::string render(const DigitString& ds, unsigned base);

/// ℓ^k, throwing Overflow when it does not fit in Index.
Index checked_pow(unsigned base, std::size_t k);

/// Euclidean residue in [0, m).
Index floor_mod(Index n, Index m);

} // namespace substratum
