#include "substratum/dfao.hpp"

#include <unordered_set>

#include "substratum/error.hpp"

namespace substratum {

std::string_view to_string(Reading r) { return r == Reading::direct ? "direct" : "reverse"; }

void Dfao::check() const {
    const std::size_t n = size();
    if (base < 2) throw Error(ErrorCode::BadBase, "automaton base must be at least 2");
    if (n == 0) throw Error(ErrorCode::InvalidInput, "automaton has no states");
    if (delta.size() != n * base) throw Error(ErrorCode::InvalidInput, "transition table is not total");
    for (auto t : delta)
        if (t >= n) throw Error(ErrorCode::InvalidInput, "transition to an unknown state");
    if (initial_nonneg >= n || (initial_neg && *initial_neg >= n)) throw Error(ErrorCode::InvalidInput, "unknown initial state");
    if (output_nonneg.size() != n) throw Error(ErrorCode::InvalidInput, "output map is not total");
    if (initial_neg && output_neg.size() != n) throw Error(ErrorCode::InvalidInput, "negative-side output map is not total");
    if (!initial_neg && !output_neg.empty()) throw Error(ErrorCode::InvalidInput, "negative-side outputs without a negative initial state");
    for (auto a : output_nonneg)
        if (a >= output_alphabet.size()) throw Error(ErrorCode::InvalidInput, "output letter outside the output alphabet");
    for (auto a : output_neg)
        if (a >= output_alphabet.size()) throw Error(ErrorCode::InvalidInput, "output letter outside the output alphabet");
    std::unordered_set<std::string> names(state_names.begin(), state_names.end());
    if (names.size() != n) throw Error(ErrorCode::InvalidInput, "state names are not unique");
}

StateId walk(const Dfao& m, StateId from, const DigitString& ds) {
    StateId s = from;
    auto feed = [&](Digit d) {
        if (d >= m.base) throw Error(ErrorCode::DigitOutOfRange, "digit " + std::to_string(d) + " in base " + std::to_string(m.base));
        s = m.next(s, d);
    };
    if (m.reading == Reading::direct)
        for (auto it = ds.digits.begin(); it != ds.digits.end(); ++it) feed(*it);
    else
        for (auto it = ds.digits.rbegin(); it != ds.digits.rend(); ++it) feed(*it);
    return s;
}

Letter run_digits(const Dfao& m, const DigitString& ds) {
    if (ds.sign == Sign::nonneg) return m.output_nonneg[walk(m, m.initial_nonneg, ds)];
    if (!m.initial_neg) throw Error(ErrorCode::NoNegativeSide, "the automaton only generates the non-negative side");
    return m.output_neg[walk(m, *m.initial_neg, ds)];
}

Letter run(const Dfao& m, Index n) {
    if (n < 0 && !m.initial_neg) throw Error(ErrorCode::NoNegativeSide, "the automaton only generates the non-negative side");
    return run_digits(m, to_digits(n, m.base));
}

} // namespace substratum
