#pragma once

#include <vector>

#include "substratum/budget.hpp"
#include "substratum/substitution.hpp"
#include "substratum/window.hpp"

namespace substratum {

/// u on [−ℓ^g, ℓ^g − 1], obtained by substituting the seed a_l · a_r g times.
/// Requires a seeded substitution that fixes its seed (simplify first).
/// Throws SeedMissing, BadSeed, InvalidInput (g = 0) or Overflow when 2ℓ^g
/// exceeds the window budget.
Window expand(const Substitution& sub, unsigned generations, const Budget& budget = Budget::from_env());

/// Sorted distinct letters at n + m·step for every m with the index inside w.
/// Throws IndexOutOfWindow when n is outside w, InvalidInput when step ≤ 0.
std::vector<Letter> sample_progression(const Window& w, Index n, Index step);

/// Λ_r: the window of (u_{ℓn+r}) over every n with ℓn + r inside w.
Window cartier(const Window& w, unsigned base, Digit r);

/// The letter-wise image m(u) of a window.
Window map_letters(const Window& w, const ColumnMap& m);

} // namespace substratum
