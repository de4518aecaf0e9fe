#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "substratum/budget.hpp"
#include "substratum/column_map.hpp"

namespace substratum {

class Substitution;

/// The semigroup generated by a set of column maps under composition.
struct SemigroupClosure {
    std::vector<ColumnMap> generators;
    /// Sorted by table (ordinal-lexicographic).
    std::vector<ColumnMap> elements;
    bool contains_id = false;
    std::size_t min_rank = 0;

    bool contains(const ColumnMap& m) const;
};

/// Least composition-closed superset of the generators. Throws StateExplosion.
SemigroupClosure closure(std::span<const ColumnMap> generators, const Budget& budget = Budget::from_env());

std::size_t min_rank(const SemigroupClosure& c);

/// Eventually periodic set of lengths k such that an element is a product of
/// exactly k generators (k = 0 stands for the empty product, the identity).
struct LengthSet {
    /// Membership for k in [0, threshold + period).
    std::vector<bool> initial;
    std::size_t threshold = 0;
    std::size_t period = 1;

    bool contains(std::size_t k) const;
    /// True when the set contains a positive multiple of every n ≥ 1.
    bool hits_every_modulus() const;
};

/// Layered saturation P_0 = {id}, P_{k+1} = P_k · generators, with the layer
/// sequence's eventual cycle P_{t+p} = P_t.
struct GradedReachability {
    std::vector<ColumnMap> generators;
    /// Closure of the generators together with the identity, sorted.
    std::vector<ColumnMap> elements;
    /// Parallel to elements.
    std::vector<LengthSet> lengths;
    std::size_t threshold = 0;
    std::size_t period = 1;
    /// P_0 … P_{t+p−1}, as sorted indices into elements.
    std::vector<std::vector<std::uint32_t>> layers;

    /// Index into elements, or -1.
    long index_of(const ColumnMap& m) const;
    /// P_k for any k.
    const std::vector<std::uint32_t>& layer(std::size_t k) const;
    /// ⟨id, products of exactly n generators⟩, i.e. ⟨id, θ^n_i⟩ when the generators are θ's columns.
    std::vector<ColumnMap> monoid_of_power(std::size_t n) const;
};

GradedReachability graded_reachability(std::span<const ColumnMap> generators, const Budget& budget = Budget::from_env());
GradedReachability graded_reachability(const Substitution& sub, const Budget& budget = Budget::from_env());

/// S_θ = ⋂_n ⟨id, θ^n_i⟩.
struct StructureSemigroup {
    /// Sorted; always contains the identity.
    std::vector<ColumnMap> elements;
    /// Least n with ⟨id, θ^n_i⟩ = S_θ.
    std::size_t stabilizing_exponent = 1;
    /// Non-empty only if some ⟨id, θ^n_i⟩ ⊄ ⟨id, θ^d_i⟩ with d | n was observed.
    std::vector<std::string> diagnostics;

    bool contains(const ColumnMap& m) const;
};

StructureSemigroup structure_semigroup(const Substitution& sub, const Budget& budget = Budget::from_env());
StructureSemigroup structure_semigroup(const GradedReachability& graded);

} // namespace substratum
