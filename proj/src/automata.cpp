#include "substratum/automata.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>

#include "substratum/semigroup.hpp"

namespace substratum {

namespace {

struct VectorHash {
    std::size_t operator()(const std::vector<Letter>& v) const noexcept {
        return std::hash<ColumnMap>{}(ColumnMap(v));
    }
};

// Shortest digit word (in reading order) leading to each reachable pair of a product machine.
struct PairSearch {
    const Dfao& a;
    const Dfao& b;

    template <typename Mismatch>
    std::optional<std::vector<Digit>> find(StateId sa, StateId sb, Mismatch mismatch) const {
        std::map<std::pair<StateId, StateId>, std::pair<std::pair<StateId, StateId>, Digit>> parent;
        std::queue<std::pair<StateId, StateId>> q;
        const auto start = std::make_pair(sa, sb);
        parent[start] = {start, 0};
        q.push(start);
        while (!q.empty()) {
            auto cur = q.front();
            q.pop();
            if (mismatch(cur.first, cur.second)) {
                std::vector<Digit> word;
                for (auto p = cur; p != start; p = parent[p].first) word.push_back(parent[p].second);
                std::reverse(word.begin(), word.end());
                return word;
            }
            for (Digit d = 0; d < a.base; ++d) {
                auto nxt = std::make_pair(a.next(cur.first, d), b.next(cur.second, d));
                if (parent.emplace(nxt, std::make_pair(cur, d)).second) q.push(nxt);
            }
        }
        return std::nullopt;
    }
};

DigitString word_to_digits(const std::vector<Digit>& read_order, Reading reading, Sign sign) {
    DigitString ds{read_order, sign};
    if (reading == Reading::reverse) std::reverse(ds.digits.begin(), ds.digits.end());
    return ds;
}

bool same_output(const Dfao& a, Letter la, const Dfao& b, Letter lb) {
    return a.output_alphabet.symbol(la) == b.output_alphabet.symbol(lb);
}

EquivalenceResult bounded_compare(const Dfao& a, const Dfao& b, Index bound) {
    EquivalenceResult r;
    r.method = EquivalenceMethod::bounded;
    r.bound = bound;
    const bool both_sides = a.two_sided() && b.two_sided();
    for (Index n = both_sides ? -bound : 0; n <= bound; ++n)
        if (!same_output(a, run(a, n), b, run(b, n))) {
            r.equivalent = false;
            r.witness = n;
            return r;
        }
    return r;
}

} // namespace

std::optional<StateId> SemigroupAutomaton::state_of(const ColumnMap& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) return std::nullopt;
    return static_cast<StateId>(it - labels.begin());
}

Dfao build_direct(const Substitution& sub) {
    if (!sub.seed()) throw Error(ErrorCode::SeedMissing, "the direct automaton needs a seed");
    Dfao m;
    m.base = sub.length();
    m.reading = Reading::direct;
    m.output_alphabet = sub.alphabet();
    m.state_names = sub.alphabet().symbols();
    m.delta.resize(sub.letters() * m.base);
    for (std::size_t a = 0; a < sub.letters(); ++a)
        for (Digit i = 0; i < m.base; ++i) m.delta[a * m.base + i] = sub.rule(static_cast<Letter>(a))[i];
    m.initial_nonneg = sub.seed()->right;
    m.initial_neg = sub.seed()->left;
    m.output_nonneg.resize(sub.letters());
    for (std::size_t a = 0; a < sub.letters(); ++a) m.output_nonneg[a] = static_cast<Letter>(a);
    m.output_neg = m.output_nonneg;
    return m;
}

SemigroupAutomaton build_reverse_semigroup(const Substitution& sub, const Budget& budget) {
    if (!sub.seed()) throw Error(ErrorCode::SeedMissing, "the semigroup automaton needs a seed");
    if (!is_simplified(sub)) throw Error(ErrorCode::InvalidInput, "the semigroup automaton needs a simplified substitution");
    if (!seed_is_fixed(sub)) throw Error(ErrorCode::BadSeed, "the seed is not fixed by the substitution");
    const auto gens = columns(sub);
    const std::size_t base = sub.length();

    SemigroupAutomaton out;
    out.seed = *sub.seed();
    auto& m = out.machine;
    m.base = static_cast<unsigned>(base);
    m.reading = Reading::reverse;
    m.output_alphabet = sub.alphabet();

    std::unordered_map<ColumnMap, StateId> ids;
    auto intern = [&](const ColumnMap& label) {
        auto [it, fresh] = ids.emplace(label, static_cast<StateId>(out.labels.size()));
        if (fresh) {
            out.labels.push_back(label);
            if (out.labels.size() > budget.states)
                throw Error(ErrorCode::StateExplosion, "semigroup automaton exceeds " + std::to_string(budget.states) + " states");
        }
        return it->second;
    };
    intern(ColumnMap::identity(sub.letters()));
    for (std::size_t s = 0; s < out.labels.size(); ++s) {
        for (std::size_t i = 0; i < base; ++i) {
            StateId t = intern(compose(out.labels[s], gens[i]));
            m.delta.push_back(t);
        }
    }
    for (const auto& label : out.labels) {
        m.state_names.push_back(render(label, sub.alphabet()));
        m.output_nonneg.push_back(label(out.seed.right));
        m.output_neg.push_back(label(out.seed.left));
    }
    m.initial_nonneg = 0;
    m.initial_neg = 0;

    auto sorted = out.labels;
    std::sort(sorted.begin(), sorted.end());
    out.labels_equal_structure_semigroup = sorted == structure_semigroup(sub, budget).elements;
    return out;
}

Dfao reverse_and_determinize(const Dfao& direct, const Budget& budget) {
    if (direct.reading != Reading::direct) throw Error(ErrorCode::InvalidInput, "reverse_and_determinize expects a direct-reading automaton");
    direct.check();
    const std::size_t n = direct.size();
    const unsigned base = direct.base;
    const bool two = direct.two_sided();

    // A subset state is the family of reversed-edge subsets B_c = {q : ω(δ(q, w)) = c},
    // one family per side; it is stored as the labelling q ↦ c, which encodes
    // exactly the same family. Prepending digit i maps B_c to {q : δ(q, i) ∈ B_c}.
    std::vector<std::vector<Letter>> states;
    std::unordered_map<std::vector<Letter>, StateId, VectorHash> ids;
    auto intern = [&](std::vector<Letter> key) {
        auto [it, fresh] = ids.emplace(key, static_cast<StateId>(states.size()));
        if (fresh) {
            states.push_back(std::move(key));
            if (states.size() > budget.states)
                throw Error(ErrorCode::StateExplosion, "determinized automaton exceeds " + std::to_string(budget.states) + " states");
        }
        return it->second;
    };
    std::vector<Letter> start(direct.output_nonneg);
    if (two) start.insert(start.end(), direct.output_neg.begin(), direct.output_neg.end());
    intern(start);

    Dfao m;
    m.base = base;
    m.reading = Reading::reverse;
    m.output_alphabet = direct.output_alphabet;
    for (std::size_t s = 0; s < states.size(); ++s) {
        for (Digit i = 0; i < base; ++i) {
            std::vector<Letter> key(states[s].size());
            for (std::size_t q = 0; q < n; ++q) {
                StateId t = direct.next(static_cast<StateId>(q), i);
                key[q] = states[s][t];
                if (two) key[n + q] = states[s][n + t];
            }
            m.delta.push_back(intern(std::move(key)));
        }
    }
    for (std::size_t s = 0; s < states.size(); ++s) {
        m.state_names.push_back("q" + std::to_string(s));
        m.output_nonneg.push_back(states[s][direct.initial_nonneg]);
        if (two) m.output_neg.push_back(states[s][n + *direct.initial_neg]);
    }
    m.initial_nonneg = 0;
    if (two) m.initial_neg = 0;
    return m;
}

Dfao trim(const Dfao& m) {
    std::vector<long> remap(m.size(), -1);
    std::vector<StateId> order;
    auto visit = [&](StateId s) {
        if (remap[s] >= 0) return;
        remap[s] = static_cast<long>(order.size());
        order.push_back(s);
    };
    visit(m.initial_nonneg);
    if (m.initial_neg) visit(*m.initial_neg);
    for (std::size_t k = 0; k < order.size(); ++k)
        for (Digit d = 0; d < m.base; ++d) visit(m.next(order[k], d));

    Dfao out;
    out.base = m.base;
    out.reading = m.reading;
    out.output_alphabet = m.output_alphabet;
    for (StateId s : order) {
        out.state_names.push_back(m.state_names[s]);
        for (Digit d = 0; d < m.base; ++d) out.delta.push_back(static_cast<StateId>(remap[m.next(s, d)]));
        out.output_nonneg.push_back(m.output_nonneg[s]);
        if (m.initial_neg) out.output_neg.push_back(m.output_neg[s]);
    }
    out.initial_nonneg = static_cast<StateId>(remap[m.initial_nonneg]);
    if (m.initial_neg) out.initial_neg = static_cast<StateId>(remap[*m.initial_neg]);
    return out;
}

Dfao minimize(const Dfao& input) {
    const Dfao m = trim(input);
    const std::size_t n = m.size();
    const bool two = m.two_sided();

    std::vector<std::uint32_t> cls(n);
    std::size_t classes = 0;
    {
        std::map<std::pair<int, int>, std::uint32_t> initial;
        for (std::size_t s = 0; s < n; ++s) {
            auto key = std::make_pair(int(m.output_nonneg[s]), two ? int(m.output_neg[s]) : -1);
            cls[s] = initial.emplace(key, static_cast<std::uint32_t>(initial.size())).first->second;
        }
        classes = initial.size();
    }
    for (;;) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> signatures;
        std::vector<std::uint32_t> next(n);
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<std::uint32_t> sig{cls[s]};
            for (Digit d = 0; d < m.base; ++d) sig.push_back(cls[m.next(static_cast<StateId>(s), d)]);
            next[s] = signatures.emplace(std::move(sig), static_cast<std::uint32_t>(signatures.size())).first->second;
        }
        cls = std::move(next);
        if (signatures.size() == classes) break;
        classes = signatures.size();
    }

    // Quotient, then renumber by BFS through trim().
    std::vector<long> rep(classes, -1);
    for (std::size_t s = 0; s < n; ++s)
        if (rep[cls[s]] < 0) rep[cls[s]] = static_cast<long>(s);
    Dfao q;
    q.base = m.base;
    q.reading = m.reading;
    q.output_alphabet = m.output_alphabet;
    for (std::size_t c = 0; c < classes; ++c) {
        auto s = static_cast<StateId>(rep[c]);
        q.state_names.push_back(m.state_names[s]);
        for (Digit d = 0; d < m.base; ++d) q.delta.push_back(cls[m.next(s, d)]);
        q.output_nonneg.push_back(m.output_nonneg[s]);
        if (two) q.output_neg.push_back(m.output_neg[s]);
    }
    q.initial_nonneg = cls[m.initial_nonneg];
    if (two) q.initial_neg = cls[*m.initial_neg];
    return trim(q);
}

EquivalenceResult equivalent(const Dfao& a, const Dfao& b, Index bound) {
    if (a.base != b.base) throw Error(ErrorCode::InvalidInput, "automata read different bases");
    if (a.two_sided() != b.two_sided()) {
        EquivalenceResult r;
        r.equivalent = false;
        r.witness = -1;
        return r;
    }
    if (a.reading != b.reading) return bounded_compare(a, b, bound);

    const PairSearch search{a, b};
    const Digit marker = a.base - 1;
    auto nonneg_mismatch = [&](StateId x, StateId y) { return !same_output(a, a.output_nonneg[x], b, b.output_nonneg[y]); };
    auto neg_mismatch = [&](StateId x, StateId y) { return !same_output(a, a.output_neg[x], b, b.output_neg[y]); };

    // Product reachability also compares padded (non-canonical) words; a
    // mismatch is only reported once run() confirms it at a real index.
    auto confirm = [&](const DigitString& ds) -> std::optional<EquivalenceResult> {
        Index n = padded_value(ds, a.base);
        if (!same_output(a, run(a, n), b, run(b, n))) {
            EquivalenceResult r;
            r.equivalent = false;
            r.witness = n;
            return r;
        }
        return std::nullopt;
    };

    if (auto word = search.find(a.initial_nonneg, b.initial_nonneg, nonneg_mismatch)) {
        if (auto r = confirm(word_to_digits(*word, a.reading, Sign::nonneg))) return *r;
        return bounded_compare(a, b, bound);
    }
    if (!a.two_sided()) return {};

    std::optional<std::vector<Digit>> word;
    if (a.reading == Reading::direct) {
        word = search.find(a.next(*a.initial_neg, marker), b.next(*b.initial_neg, marker), neg_mismatch);
        if (word) word->insert(word->begin(), marker);
    } else {
        word = search.find(*a.initial_neg, *b.initial_neg,
                           [&](StateId x, StateId y) { return neg_mismatch(a.next(x, marker), b.next(y, marker)); });
        if (word) word->push_back(marker);
    }
    if (word) {
        if (auto r = confirm(word_to_digits(*word, a.reading, Sign::neg))) return *r;
        return bounded_compare(a, b, bound);
    }
    return {};
}

} // namespace substratum
