#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "substratum/budget.hpp"
#include "substratum/substitution.hpp"
#include "substratum/window.hpp"

namespace substratum {

enum class Side { one_sided, two_sided };

/// The subsequence (u_{ℓ^e·n + j})_n, which equals class_map(u).
struct KernelElement {
    ColumnMap class_map;
    std::size_t e = 0;
    /// n_0 … n_{e−1}, least significant first, so that
    /// class_map = θ_{n_0} ∘ … ∘ θ_{n_{e−1}} and j = Σ n_t ℓ^t.
    std::vector<Digit> word;
    /// Empty when ℓ^e overflows an Index.
    std::optional<Index> j;
    /// First 16 letters of the subsequence on n ≥ 0.
    Word sample;
};

struct Kernel {
    Side side = Side::two_sided;
    /// Letters occurring in u (on n ≥ 0 only for one-sided kernels).
    std::vector<Letter> occurring;
    /// Ordered by (e, j).
    std::vector<KernelElement> elements;

    std::size_t size() const noexcept { return elements.size(); }
    /// Element whose class map agrees with m on the occurring letters.
    std::optional<std::size_t> find(const ColumnMap& m) const;
};

/// Letters reachable from a_r (and from a_l when two-sided) under θ.
/// Throws SeedMissing.
std::vector<Letter> occurring_letters(const Substitution& sub, Side side);

/// Symbolic ℓ-kernel: level-by-level right composition with the columns,
/// starting from id, classes compared on the occurring letters. Stops once a
/// level's class set repeats an earlier level. Throws SeedMissing, BadSeed
/// (seed not fixed; simplify first) or StateExplosion.
Kernel enumerate_kernel(const Substitution& sub, Side side = Side::two_sided, const Budget& budget = Budget::from_env());

struct BruteForceKernel {
    std::size_t count = 0;
    /// First (e, j) reaching each distinct subsequence, in (e, j) order.
    std::vector<std::pair<std::size_t, Index>> representatives;
    /// Letters per compared subsequence.
    std::size_t compared_length = 0;
};

/// Counts distinct subsequences u_{ℓ^e n + j} for e ≤ e_max, all sampled on
/// the same n-range: [−L, L) for two-sided and [0, L) for one-sided, with L
/// the largest value keeping every index inside w. Throws WindowTooShort when
/// the compared length falls below min_length.
BruteForceKernel brute_force_kernel(const Window& w, unsigned base, std::size_t e_max, Side side = Side::two_sided,
                                    std::size_t min_length = 4);

} // namespace substratum
