#pragma once

#include <optional>
#include <span>
#include <vector>

#include "substratum/budget.hpp"
#include "substratum/column_map.hpp"
#include "substratum/error.hpp"
#include "substratum/window.hpp"

namespace substratum {

/// The adjacent pair a_l · a_r that generates a two-sided fixed point.
struct Seed {
    Letter left;
    Letter right;

    bool operator==(const Seed&) const = default;
};

/// A constant-length substitution. Construction only stores the data; use
/// validate() (or the JSON reader, which validates) to check the invariants.
class Substitution {
public:
    Substitution(Alphabet alphabet, unsigned length, std::vector<Word> rules, std::optional<Seed> seed = std::nullopt);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t letters() const noexcept { return alphabet_.size(); }
    unsigned length() const noexcept { return length_; }
    const Word& rule(Letter a) const { return rules_.at(a); }
    const std::vector<Word>& rules() const noexcept { return rules_; }
    const std::optional<Seed>& seed() const noexcept { return seed_; }

    Substitution with_seed(std::optional<Seed> seed) const;
    /// θ(w) by concatenation.
    Word apply(std::span<const Letter> word) const;

    bool operator==(const Substitution&) const = default;

private:
    Alphabet alphabet_;
    unsigned length_;
    std::vector<Word> rules_;
    std::optional<Seed> seed_;
};

/// Empty when every invariant holds. A seed is accepted when it seeds a
/// two-sided fixed point of some power: a_r is a periodic point of θ_0 and
/// a_l one of θ_{ℓ−1}.
std::optional<Error> validate(const Substitution& sub);
/// Throws the error validate() reports.
void require_valid(const Substitution& sub);

/// θ(a_l) ends with a_l and θ(a_r) starts with a_r.
bool seed_is_fixed(const Substitution& sub);

/// θ_i. Throws DigitOutOfRange.
ColumnMap column(const Substitution& sub, std::size_t i);
std::vector<ColumnMap> columns(const Substitution& sub);

/// θ^n; the seed carries over. Throws Overflow when ℓ^n exceeds the word budget.
Substitution power(const Substitution& sub, unsigned n, const Budget& budget = Budget::from_env());

/// First and last columns are idempotent.
bool is_simplified(const Substitution& sub);

struct Simplified {
    Substitution sub;
    unsigned exponent;
};

/// The least power θ^n in simplified form.
Simplified simplify(const Substitution& sub, const Budget& budget = Budget::from_env());

/// u_lo … u_hi of the fixed point seeded by a_l · a_r (u_{−1} = a_l, u_0 = a_r),
/// by repeated substitution. Throws SeedMissing, or BadSeed when θ does not fix
/// the seed (simplify first).
Window fixed_point_window(const Substitution& sub, Index lo, Index hi, const Budget& budget = Budget::from_env());

bool is_primitive(const Substitution& sub);

/// h(θ) from the return positions of u_0 = a_r, computed on the simplified form.
/// Throws SeedMissing.
unsigned height(const Substitution& sub, const Budget& budget = Budget::from_env());

/// Minimum rank over the semigroup generated by the columns. Throws
/// NontrivialHeight when h(θ) > 1. Unseeded inputs use default_seed() for the
/// height gate.
std::size_t column_number(const Substitution& sub, const Budget& budget = Budget::from_env());

/// The lexicographically first valid seed (a_l, a_r).
Seed default_seed(const Substitution& sub);

/// True when the first 4ℓ³ letters of the fixed point have no period ≤ ℓ².
/// A heuristic only; callers report it as such.
bool looks_aperiodic(const Substitution& sub, const Budget& budget = Budget::from_env());

} // namespace substratum
