#pragma once

// Worked substitutions and brute-force oracles shared by the tests. The
// oracles work on plain strings and tables and call nothing from the library.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "substratum/substitution.hpp"

namespace fixtures {

using substratum::Alphabet;
using substratum::Index;
using substratum::Seed;
using substratum::Substitution;
using substratum::Word;

using Rules = std::map<char, std::string>;

inline Substitution make(const Rules& rules, std::optional<std::pair<char, char>> seed = std::nullopt) {
    std::vector<std::string> symbols;
    for (const auto& [a, w] : rules) symbols.emplace_back(1, a);
    Alphabet alphabet(symbols);
    std::vector<Word> words;
    for (const auto& [a, w] : rules) words.push_back(alphabet.tokenize(w));
    std::optional<Seed> s;
    if (seed) s = Seed{alphabet.letter(std::string(1, seed->first)), alphabet.letter(std::string(1, seed->second))};
    return Substitution(alphabet, static_cast<unsigned>(rules.begin()->second.size()), words, s);
}

inline const Rules pd_rules{{'a', "ab"}, {'b', "aa"}};
inline const Rules pd2_rules{{'a', "abaa"}, {'b', "abab"}};
inline const Rules bigdiag_rules{{'a', "acb"}, {'b', "baa"}, {'c', "bba"}};
inline const Rules thue_morse_rules{{'a', "ab"}, {'b', "ba"}};
/// Height 2 for ℓ = 3: a occurs only at even positions of the right fixed point.
inline const Rules height_two_rules{{'a', "abc"}, {'b', "dab"}, {'c', "adc"}, {'d', "bcd"}};

inline Substitution period_doubling() { return make(pd_rules, std::pair{'a', 'a'}); }
inline Substitution period_doubling_squared() { return make(pd2_rules, std::pair{'a', 'a'}); }
inline Substitution bigdiag() { return make(bigdiag_rules, std::pair{'b', 'a'}); }
inline Substitution thue_morse() { return make(thue_morse_rules, std::pair{'a', 'a'}); }
inline Substitution height_two() { return make(height_two_rules, std::pair{'c', 'a'}); }

namespace brute {

inline std::string substitute(const Rules& rules, const std::string& w) {
    std::string out;
    for (char c : w) out += rules.at(c);
    return out;
}

inline Rules square(const Rules& rules) {
    Rules out;
    for (const auto& [a, w] : rules) out[a] = substitute(rules, w);
    return out;
}

/// u_lo … u_hi of the fixed point seeded by left·right, which the rules must fix.
inline std::string fixed_point(const Rules& rules, char left, char right, Index lo, Index hi) {
    std::string l(1, left), r(1, right);
    while (static_cast<Index>(l.size()) < -lo || static_cast<Index>(r.size()) <= hi) {
        l = substitute(rules, l);
        r = substitute(rules, r);
    }
    std::string out;
    for (Index n = lo; n <= hi; ++n) out += n < 0 ? l[l.size() + n] : r[n];
    return out;
}

/// A column map as a string of images, e.g. "ab" for id on {a, b}.
inline std::string column(const Rules& rules, std::size_t i) {
    std::string out;
    for (const auto& [a, w] : rules) out += w[i];
    return out;
}

/// (f ∘ g) on maps given as image strings over the sorted alphabet.
inline std::string compose(const std::string& f, const std::string& g, const std::string& letters) {
    std::string out;
    for (char c : g) out += f[letters.find(c)];
    return out;
}

inline std::string letters_of(const Rules& rules) {
    std::string out;
    for (const auto& [a, w] : rules) out += a;
    return out;
}

/// Pairwise products until nothing new appears.
inline std::set<std::string> closure(std::set<std::string> gens, const std::string& letters) {
    std::set<std::string> all = gens;
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<std::string> snapshot(all.begin(), all.end());
        for (const auto& f : snapshot)
            for (const auto& g : snapshot)
                grew |= all.insert(compose(f, g, letters)).second;
    }
    return all;
}

/// ⟨id, columns of θ^n⟩.
inline std::set<std::string> monoid_of_power(const Rules& rules, unsigned n) {
    Rules p = rules;
    for (unsigned k = 1; k < n; ++k) {
        Rules next;
        for (const auto& [a, w] : p) next[a] = substitute(rules, w);
        p = next;
    }
    std::set<std::string> gens;
    for (std::size_t i = 0; i < p.begin()->second.size(); ++i) gens.insert(column(p, i));
    const std::string letters = letters_of(rules);
    auto m = closure(gens, letters);
    m.insert(letters);
    return m;
}

/// Intersection of ⟨id, θ^n_i⟩ over n ≤ max_n.
inline std::set<std::string> structure_semigroup(const Rules& rules, unsigned max_n) {
    std::set<std::string> s = monoid_of_power(rules, 1);
    for (unsigned n = 2; n <= max_n; ++n) {
        auto m = monoid_of_power(rules, n);
        std::set<std::string> keep;
        std::set_intersection(s.begin(), s.end(), m.begin(), m.end(), std::inserter(keep, keep.begin()));
        s = keep;
    }
    return s;
}

inline std::size_t min_rank(const std::set<std::string>& maps) {
    std::size_t best = 1000;
    for (const auto& m : maps) best = std::min(best, std::set<char>(m.begin(), m.end()).size());
    return best;
}

/// Distinct subsequences u_{ℓ^e n + j}, e ≤ e_max, n ∈ [−L, L), read from a
/// window whose first letter has index lo.
inline std::size_t kernel_count(const std::string& w, Index lo, Index base, std::size_t e_max) {
    const Index hi = lo + static_cast<Index>(w.size()) - 1;
    Index top = 1;
    for (std::size_t e = 0; e < e_max; ++e) top *= base;
    const Index L = std::min(-lo, hi + 1) / top;
    std::set<std::string> seen;
    Index step = 1;
    for (std::size_t e = 0; e <= e_max; ++e, step *= base)
        for (Index j = 0; j < step; ++j) {
            std::string s;
            for (Index n = -L; n < L; ++n) s += w[step * n + j - lo];
            seen.insert(s);
        }
    return seen.size();
}

/// Letters seen along n + m·step inside the window.
inline std::set<char> progression(const std::string& w, Index lo, Index n, Index step) {
    std::set<char> out;
    for (Index i = n; i >= lo; i -= step) out.insert(w[i - lo]);
    for (Index i = n; i < lo + static_cast<Index>(w.size()); i += step) out.insert(w[i - lo]);
    return out;
}

/// For each residue class mod step, the bit set of letters (by position in
/// `letters`) seen in the window.
inline std::vector<unsigned> residue_masks(const std::string& w, Index lo, Index step, const std::string& letters) {
    std::vector<unsigned> masks(static_cast<std::size_t>(step), 0);
    for (Index i = 0; i < static_cast<Index>(w.size()); ++i) {
        Index r = (lo + i) % step;
        if (r < 0) r += step;
        masks[static_cast<std::size_t>(r)] |= 1u << letters.find(w[i]);
    }
    return masks;
}

} // namespace brute

} // namespace fixtures
