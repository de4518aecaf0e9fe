#pragma once

#include <optional>
#include <vector>

#include "substratum/budget.hpp"
#include "substratum/dfao.hpp"
#include "substratum/substitution.hpp"

namespace substratum {

/// Cobham's machine: states are letters, δ(a, i) = θ_i(a), the non-negative
/// side starts at a_r and the negative side at a_l, outputs are the letters
/// themselves. Throws SeedMissing.
Dfao build_direct(const Substitution& sub);

/// Reverse-reading machine whose states are labelled by column maps:
/// the initial state is id, δ(s, i) = s ∘ θ_i, ω_r(s) = s(a_r), ω_l(s) = s(a_l).
struct SemigroupAutomaton {
    Dfao machine;
    /// Parallel to machine states.
    std::vector<ColumnMap> labels;
    Seed seed;
    /// The reachable labels, ⟨id, θ_i⟩, coincide with S_θ (stabilizing exponent 1).
    bool labels_equal_structure_semigroup = false;

    std::optional<StateId> state_of(const ColumnMap& label) const;
};

/// Requires a simplified, seeded substitution. Throws SeedMissing, BadSeed,
/// InvalidInput (not simplified) or StateExplosion.
SemigroupAutomaton build_reverse_semigroup(const Substitution& sub, const Budget& budget = Budget::from_env());

/// Reverses every edge of a direct-reading machine and determinizes by the
/// subset construction, starting from the output classes ω^{-1}(c) of each
/// side. Throws InvalidInput for reverse-reading input, StateExplosion.
Dfao reverse_and_determinize(const Dfao& direct, const Budget& budget = Budget::from_env());

/// Drops states unreachable from the initial states.
Dfao trim(const Dfao& m);

/// Moore partition refinement; the initial partition separates states by their
/// (ω_nonneg, ω_neg) output pair. States of the result are in BFS order.
Dfao minimize(const Dfao& m);

enum class EquivalenceMethod { product, bounded };

struct EquivalenceResult {
    bool equivalent = true;
    /// An index where the generated sequences differ.
    std::optional<Index> witness;
    EquivalenceMethod method = EquivalenceMethod::product;
    /// Indices compared when method == bounded.
    Index bound = 0;
};

/// Decides whether two machines generate the same sequence: exactly by
/// product-machine reachability when the readings match, otherwise by
/// comparing run() on [−bound, bound].
EquivalenceResult equivalent(const Dfao& a, const Dfao& b, Index bound = 10'000);

} // namespace substratum
