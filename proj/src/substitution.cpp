#include "substratum/substitution.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "substratum/semigroup.hpp"

namespace substratum {

namespace {

bool is_periodic_point(const ColumnMap& f, Letter a) {
    Letter x = a;
    for (std::size_t i = 0; i < f.size(); ++i) {
        x = f(x);
        if (x == a) return true;
    }
    return false;
}

std::size_t checked_word_length(unsigned base, unsigned n, const Budget& budget) {
    std::size_t len = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (__builtin_mul_overflow(len, static_cast<std::size_t>(base), &len) || len > budget.word_length)
            throw Error(ErrorCode::Overflow, std::to_string(base) + "^" + std::to_string(n) + " exceeds the word-length budget of " +
                                                 std::to_string(budget.word_length));
    }
    return len;
}

void require_fixed_seed(const Substitution& sub) {
    if (!sub.seed()) throw Error(ErrorCode::SeedMissing, "the substitution has no seed");
    if (!seed_is_fixed(sub))
        throw Error(ErrorCode::BadSeed, "the seed is not fixed by this power of the substitution; simplify it first");
}

// u_0 … u_{length−1}; θ(u_0 … u_m) is again a prefix of u.
Word right_prefix(const Substitution& sub, std::size_t length) {
    Word w{sub.seed()->right};
    const std::size_t l = sub.length();
    while (w.size() < length) {
        std::size_t take = std::min(w.size(), (length + l - 1) / l);
        w = sub.apply(std::span<const Letter>(w).first(take));
    }
    w.resize(length);
    return w;
}

// u_{−length} … u_{−1}.
Word left_suffix(const Substitution& sub, std::size_t length) {
    Word w{sub.seed()->left};
    const std::size_t l = sub.length();
    while (w.size() < length) {
        std::size_t take = std::min(w.size(), (length + l - 1) / l);
        w = sub.apply(std::span<const Letter>(w).last(take));
    }
    return Word(w.end() - static_cast<std::ptrdiff_t>(length), w.end());
}

} // namespace

Substitution::Substitution(Alphabet alphabet, unsigned length, std::vector<Word> rules, std::optional<Seed> seed)
    : alphabet_(std::move(alphabet)), length_(length), rules_(std::move(rules)), seed_(seed) {}

Substitution Substitution::with_seed(std::optional<Seed> seed) const {
    Substitution s = *this;
    s.seed_ = seed;
    return s;
}

Word Substitution::apply(std::span<const Letter> word) const {
    Word out;
    out.reserve(word.size() * length_);
    for (Letter a : word) out.insert(out.end(), rules_[a].begin(), rules_[a].end());
    return out;
}

std::optional<Error> validate(const Substitution& sub) {
    const auto& A = sub.alphabet();
    if (sub.length() < 2) return Error(ErrorCode::BadBase, "substitution length must be at least 2");
    if (sub.rules().size() != A.size())
        return Error(ErrorCode::InvalidInput, "expected one rule per letter, got " + std::to_string(sub.rules().size()));
    for (std::size_t a = 0; a < A.size(); ++a) {
        const auto& w = sub.rules()[a];
        if (w.size() != sub.length())
            return Error(ErrorCode::RuleLengthMismatch, "rule for '" + A.symbol(static_cast<Letter>(a)) + "' has length " +
                                                            std::to_string(w.size()) + ", expected " + std::to_string(sub.length()));
        for (Letter b : w)
            if (b >= A.size()) return Error(ErrorCode::UnknownLetter, "rule for '" + A.symbol(static_cast<Letter>(a)) + "' uses an unknown letter");
    }
    if (auto seed = sub.seed()) {
        if (seed->left >= A.size() || seed->right >= A.size()) return Error(ErrorCode::UnknownLetter, "seed letter outside the alphabet");
        if (!is_periodic_point(column(sub, 0), seed->right))
            return Error(ErrorCode::BadSeed, "no power of the substitution has an image of '" + A.symbol(seed->right) + "' starting with it");
        if (!is_periodic_point(column(sub, sub.length() - 1), seed->left))
            return Error(ErrorCode::BadSeed, "no power of the substitution has an image of '" + A.symbol(seed->left) + "' ending with it");
    }
    return std::nullopt;
}

void require_valid(const Substitution& sub) {
    if (auto err = validate(sub)) throw *err;
}

bool seed_is_fixed(const Substitution& sub) {
    if (!sub.seed()) return false;
    const auto [l, r] = *sub.seed();
    return sub.rule(l).back() == l && sub.rule(r).front() == r;
}

ColumnMap column(const Substitution& sub, std::size_t i) {
    if (i >= sub.length())
        throw Error(ErrorCode::DigitOutOfRange, "column " + std::to_string(i) + " of a length-" + std::to_string(sub.length()) + " substitution");
    std::vector<Letter> t(sub.letters());
    for (std::size_t a = 0; a < t.size(); ++a) t[a] = sub.rules()[a][i];
    return ColumnMap(std::move(t));
}

std::vector<ColumnMap> columns(const Substitution& sub) {
    std::vector<ColumnMap> out;
    out.reserve(sub.length());
    for (std::size_t i = 0; i < sub.length(); ++i) out.push_back(column(sub, i));
    return out;
}

Substitution power(const Substitution& sub, unsigned n, const Budget& budget) {
    if (n == 0) throw Error(ErrorCode::InvalidInput, "power exponent must be positive");
    const std::size_t len = checked_word_length(sub.length(), n, budget);
    std::vector<Word> rules;
    rules.reserve(sub.letters());
    for (std::size_t a = 0; a < sub.letters(); ++a) {
        Word w{static_cast<Letter>(a)};
        for (unsigned k = 0; k < n; ++k) w = sub.apply(w);
        rules.push_back(std::move(w));
    }
    return Substitution(sub.alphabet(), static_cast<unsigned>(len), std::move(rules), sub.seed());
}

bool is_simplified(const Substitution& sub) {
    return column(sub, 0).is_idempotent() && column(sub, sub.length() - 1).is_idempotent();
}

Simplified simplify(const Substitution& sub, const Budget& budget) {
    const ColumnMap first = column(sub, 0);
    const ColumnMap last = column(sub, sub.length() - 1);
    ColumnMap p0 = first;
    ColumnMap pl = last;
    unsigned n = 1;
    // f^n is idempotent for all large multiples of the period of f, so this ends.
    while (!p0.is_idempotent() || !pl.is_idempotent()) {
        p0 = compose(p0, first);
        pl = compose(pl, last);
        if (++n > 1'000'000) throw Error(ErrorCode::Overflow, "no simplified power below exponent 10^6");
    }
    if (n == 1) return {sub, 1};
    return {power(sub, n, budget), n};
}

Window fixed_point_window(const Substitution& sub, Index lo, Index hi, const Budget& budget) {
    require_fixed_seed(sub);
    if (lo > 0 || hi < 0) throw Error(ErrorCode::InvalidInput, "window must contain indices −1..0 boundary: need lo ≤ 0 ≤ hi");
    const auto total = static_cast<std::size_t>(hi - lo + 1);
    if (total > budget.window_letters)
        throw Error(ErrorCode::Overflow, "window of " + std::to_string(total) + " letters exceeds the budget");
    Window w;
    w.lo = lo;
    w.hi = hi;
    w.letters = left_suffix(sub, static_cast<std::size_t>(-lo));
    Word right = right_prefix(sub, static_cast<std::size_t>(hi + 1));
    w.letters.insert(w.letters.end(), right.begin(), right.end());
    return w;
}

bool is_primitive(const Substitution& sub) {
    const std::size_t n = sub.letters();
    std::vector<std::vector<Letter>> succ(n), pred(n);
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<bool> seen(n, false);
        for (Letter b : sub.rule(static_cast<Letter>(a)))
            if (!seen[b]) {
                seen[b] = true;
                succ[a].push_back(b);
                pred[b].push_back(static_cast<Letter>(a));
            }
    }
    // Primitive ⇔ the occurrence digraph is strongly connected and has period 1.
    auto bfs = [n](const std::vector<std::vector<Letter>>& adj) {
        std::vector<long> level(n, -1);
        std::queue<Letter> q;
        level[0] = 0;
        q.push(0);
        while (!q.empty()) {
            Letter v = q.front();
            q.pop();
            for (Letter w : adj[v])
                if (level[w] < 0) {
                    level[w] = level[v] + 1;
                    q.push(w);
                }
        }
        return level;
    };
    auto fwd = bfs(succ);
    auto bwd = bfs(pred);
    for (std::size_t a = 0; a < n; ++a)
        if (fwd[a] < 0 || bwd[a] < 0) return false;
    long period = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (Letter b : succ[a]) period = std::gcd(period, std::labs(fwd[a] + 1 - fwd[b]));
    return period == 1;
}

unsigned height(const Substitution& sub, const Budget& budget) {
    if (!sub.seed()) throw Error(ErrorCode::SeedMissing, "height needs a seed");
    if (!is_primitive(sub)) throw Error(ErrorCode::InvalidInput, "height is defined for primitive substitutions");
    const Substitution s = simplify(sub, budget).sub;
    const Letter first = s.seed()->right;
    const std::size_t min_returns = s.letters() + 1;
    auto returns_gcd = [&](const Word& u, std::size_t& count) {
        std::size_t g = 0;
        count = 0;
        for (std::size_t a = 1; a < u.size(); ++a)
            if (u[a] == first) {
                g = std::gcd(g, a);
                ++count;
            }
        return g;
    };
    std::size_t bound = s.letters() * s.length();
    std::size_t count = 0;
    std::size_t g = returns_gcd(right_prefix(s, bound + 1), count);
    while (count < min_returns) {
        bound *= s.length();
        if (bound > budget.window_letters) throw Error(ErrorCode::Overflow, "too few returns of u_0 within the window budget");
        g = returns_gcd(right_prefix(s, bound + 1), count);
    }
    // Doubling the window must not change the gcd.
    for (;;) {
        if (2 * bound > budget.window_letters) throw Error(ErrorCode::Overflow, "return-time gcd did not stabilize within the budget");
        std::size_t g2 = returns_gcd(right_prefix(s, 2 * bound + 1), count);
        bound *= 2;
        if (g2 == g) break;
        g = g2;
    }
    for (std::size_t c = std::gcd(g, static_cast<std::size_t>(sub.length())); c > 1; c = std::gcd(g, static_cast<std::size_t>(sub.length())))
        g /= c;
    return static_cast<unsigned>(g);
}

Seed default_seed(const Substitution& sub) {
    const ColumnMap first = column(sub, 0);
    const ColumnMap last = column(sub, sub.length() - 1);
    for (std::size_t l = 0; l < sub.letters(); ++l)
        if (is_periodic_point(last, static_cast<Letter>(l)))
            for (std::size_t r = 0; r < sub.letters(); ++r)
                if (is_periodic_point(first, static_cast<Letter>(r))) return Seed{static_cast<Letter>(l), static_cast<Letter>(r)};
    throw Error(ErrorCode::InvalidInput, "substitution has no seed");
}

std::size_t column_number(const Substitution& sub, const Budget& budget) {
    const Substitution seeded = sub.seed() ? sub : sub.with_seed(default_seed(sub));
    if (unsigned h = height(seeded, budget); h > 1)
        throw Error(ErrorCode::NontrivialHeight, "height " + std::to_string(h) + " > 1; the pure base is not computed");
    return closure(columns(sub), budget).min_rank;
}

bool looks_aperiodic(const Substitution& sub, const Budget& budget) {
    Substitution s = simplify(sub, budget).sub;
    if (!s.seed()) s = s.with_seed(default_seed(s));
    const std::size_t l = sub.length();
    const std::size_t len = 4 * l * l * l;
    const std::size_t max_period = l * l;
    const Word u = right_prefix(s, len);
    for (std::size_t p = 1; p <= max_period && p < len; ++p) {
        bool periodic = true;
        for (std::size_t i = 0; i + p < len && periodic; ++i) periodic = u[i] == u[i + p];
        if (periodic) return false;
    }
    return true;
}

} // namespace substratum
