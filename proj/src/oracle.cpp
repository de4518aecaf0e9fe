#include "substratum/oracle.hpp"

#include <algorithm>

#include "substratum/error.hpp"

namespace substratum {

Letter Window::at(Index n) const {
    if (!contains(n))
        throw Error(ErrorCode::IndexOutOfWindow,
                    "index " + std::to_string(n) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return (*this)[n];
}

Window Window::slice(Index from, Index to) const {
    if (from > to || !contains(from) || !contains(to))
        throw Error(ErrorCode::IndexOutOfWindow,
                    "slice [" + std::to_string(from) + ", " + std::to_string(to) + "] outside the window");
    Window out{from, to, {}};
    out.letters.assign(letters.begin() + (from - lo), letters.begin() + (to - lo + 1));
    return out;
}

Window expand(const Substitution& sub, unsigned generations, const Budget& budget) {
    if (generations == 0) throw Error(ErrorCode::InvalidInput, "expand needs at least one generation");
    if (!sub.seed()) throw Error(ErrorCode::SeedMissing, "expand needs a seed");
    if (!seed_is_fixed(sub)) throw Error(ErrorCode::BadSeed, "the seed is not fixed by the substitution; simplify first");
    Index half = 0;
    try {
        half = checked_pow(sub.length(), generations);
    } catch (const Error&) {
        throw Error(ErrorCode::Overflow, "ℓ^g does not fit in a 64-bit index");
    }
    if (static_cast<std::size_t>(half) > budget.window_letters / 2)
        throw Error(ErrorCode::Overflow, "window of 2·" + std::to_string(half) + " letters exceeds the budget");

    Word left{sub.seed()->left};
    Word right{sub.seed()->right};
    for (unsigned g = 0; g < generations; ++g) {
        left = sub.apply(left);
        right = sub.apply(right);
    }
    Window w{-half, half - 1, std::move(left)};
    w.letters.insert(w.letters.end(), right.begin(), right.end());
    return w;
}

std::vector<Letter> sample_progression(const Window& w, Index n, Index step) {
    if (step <= 0) throw Error(ErrorCode::InvalidInput, "progression step must be positive");
    if (!w.contains(n)) throw Error(ErrorCode::IndexOutOfWindow, "index " + std::to_string(n) + " outside the window");
    std::vector<bool> seen(256, false);
    for (Index i = w.lo + floor_mod(n - w.lo, step); i <= w.hi; i += step) seen[w[i]] = true;
    std::vector<Letter> out;
    for (unsigned a = 0; a < seen.size(); ++a)
        if (seen[a]) out.push_back(static_cast<Letter>(a));
    return out;
}

namespace {

/// Smallest n with ℓn + r ≥ x.
Index ceil_div_index(Index x, Index base, Index r) {
    Index t = x - r;
    Index q = t / base;
    if (q * base < t) ++q;
    return q;
}

Index floor_div_index(Index x, Index base, Index r) {
    Index t = x - r;
    Index q = t / base;
    if (q * base > t) --q;
    return q;
}

} // namespace

Window cartier(const Window& w, unsigned base, Digit r) {
    if (r >= base) throw Error(ErrorCode::DigitOutOfRange, "Λ index " + std::to_string(r) + " in base " + std::to_string(base));
    const Index l = base;
    Window out;
    out.lo = ceil_div_index(w.lo, l, r);
    out.hi = floor_div_index(w.hi, l, r);
    if (out.hi < out.lo) return Window{0, -1, {}};
    out.letters.reserve(static_cast<std::size_t>(out.hi - out.lo + 1));
    for (Index n = out.lo; n <= out.hi; ++n) out.letters.push_back(w[l * n + r]);
    return out;
}

Window map_letters(const Window& w, const ColumnMap& m) {
    Window out{w.lo, w.hi, {}};
    out.letters.reserve(w.size());
    for (auto a : w.letters) out.letters.push_back(m(a));
    return out;
}

} // namespace substratum
