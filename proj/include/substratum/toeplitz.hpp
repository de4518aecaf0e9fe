#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "substratum/automata.hpp"
#include "substratum/budget.hpp"
#include "substratum/substitution.hpp"
#include "substratum/window.hpp"

namespace substratum {

/// Indices n of w such that every index ≡ n (mod k) inside w carries a. Only a
/// necessary condition for n ∈ Per_k(u, a), since the window is finite.
/// Throws WindowTooShort when w does not cover two periods.
std::vector<Index> per_k_window(const Window& w, Index k, Letter a);

struct PeriodicityVerdict {
    Index index = 0;
    bool periodic = false;
    /// Periodic: u is constant along index + ℓ^exponent·ℤ. Aperiodic: the
    /// digit length at which the evidence states were taken.
    std::size_t exponent = 0;
    /// u_index.
    Letter letter = 0;
    /// States reached by the residue digits (positive side) and by the
    /// canonical expansion of residue − ℓ^exponent (negative side).
    StateId positive_state = 0;
    StateId negative_state = 0;
};

struct ReducedEdge {
    StateId from;
    Digit digit;
    StateId to;
};

/// A simple cycle of the reduced graph and the ℓ-adic address it spells: the
/// digit stream prefix · cycle^∞, least significant digit first.
struct ReducedCycle {
    std::vector<StateId> vertices;
    std::vector<Digit> digits;
    /// Shortest path from id to vertices.front(), ties broken toward the
    /// cycle's digit when the cycle is all ℓ−1.
    std::vector<Digit> prefix;
    /// The integer spelled when the cycle is all 0 or all ℓ−1.
    std::optional<Index> address;
};

/// The semigroup automaton without its 1-vertices and the edges into them.
struct ReducedGraph {
    std::vector<StateId> vertices;
    std::vector<StateId> removed;
    std::vector<ReducedEdge> edges;
    /// Strongly connected components that carry a cycle.
    std::vector<std::vector<StateId>> components;
    std::vector<ReducedCycle> cycles;
    std::size_t max_cycle_length = 12;
    bool cycles_truncated = false;
};

/// Gate checks and decision procedure for Per(u) on the fixed point seeded by
/// the input. The input is simplified first.
class ToeplitzAnalyzer {
public:
    /// Throws the refusals Periodic (one letter, or the fixed point looks
    /// periodic), NotPrimitive, NontrivialHeight, NotToeplitz (column number
    /// > 1), and SeedMissing when the input has no seed.
    explicit ToeplitzAnalyzer(const Substitution& sub, const Budget& budget = Budget::from_env());

    const Substitution& substitution() const noexcept { return simplified_.sub; }
    unsigned simplified_exponent() const noexcept { return simplified_.exponent; }
    const SemigroupAutomaton& automaton() const noexcept { return automaton_; }

    /// Checks digit lengths |n|_ℓ + extra and |n|_ℓ + extra + 1.
    PeriodicityVerdict decide(Index n, std::size_t extra = 0) const;
    /// One verdict per index of [lo, hi]; throws InvariantViolation if any
    /// index is missed or repeated.
    std::vector<PeriodicityVerdict> decide_range(Index lo, Index hi) const;
    /// The least p dividing ℓ^exponent with u constant along index + pℤ.
    /// Empty for aperiodic verdicts.
    std::optional<Index> minimal_period(const PeriodicityVerdict& v) const;
    /// Whether the 0-padded (n ≥ 0) or (ℓ−1)-padded (n < 0) reverse digit
    /// stream of n avoids 1-vertices on its first |n|_ℓ + extra + 1 digits.
    bool stream_stays_reduced(Index n, std::size_t extra = 1) const;

    ReducedGraph reduced_graph(std::size_t max_cycle_length = 12, std::size_t max_cycles = 4096) const;

private:
    Simplified simplified_;
    SemigroupAutomaton automaton_;
};

PeriodicityVerdict decide_per(const Substitution& sub, Index n, const Budget& budget = Budget::from_env());
std::vector<Index> aperiodic_in_range(const Substitution& sub, Index lo, Index hi, const Budget& budget = Budget::from_env());
ReducedGraph reduced_graph(const Substitution& sub, const Budget& budget = Budget::from_env());

enum class Evidence { certified, consistent, inconsistent };

std::string_view to_string(Evidence e);

struct Certification {
    Index index = 0;
    bool periodic = false;
    /// certified: two letters seen at every tested step (aperiodic).
    /// consistent: a single letter seen at step ℓ^exponent (periodic).
    Evidence evidence = Evidence::consistent;
    std::string detail;
};

struct CertificationReport {
    Window window_bounds;
    unsigned generations = 0;
    std::vector<Certification> entries;
    std::size_t inconsistencies = 0;
};

/// Cross-checks verdicts against an expanded window of the fixed point with
/// at least ℓ^{k+3} letters for every periodic exponent k; aperiodic verdicts
/// are sampled at steps ℓ^0 … ℓ^aperiodic_depth. window_bounds carries no
/// letters, only the range.
CertificationReport certify(const ToeplitzAnalyzer& analyzer, std::span<const PeriodicityVerdict> verdicts,
                            std::size_t aperiodic_depth = 6, const Budget& budget = Budget::from_env());

} // namespace substratum
