#include "substratum/kernel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "substratum/error.hpp"

namespace substratum {

namespace {

/// Restriction of m to the occurring letters, the class identity.
Word class_key(const ColumnMap& m, const std::vector<Letter>& occurring) {
    Word key;
    key.reserve(occurring.size());
    for (auto a : occurring) key.push_back(m(a));
    return key;
}

/// Most significant digit first, so equal-length words compare as numbers.
bool smaller_offset(const std::vector<Digit>& a, const std::vector<Digit>& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

struct Candidate {
    ColumnMap map;
    std::vector<Digit> word;
};

} // namespace

std::optional<std::size_t> Kernel::find(const ColumnMap& m) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i].class_map.agrees_on(m, occurring)) return i;
    return std::nullopt;
}

std::vector<Letter> occurring_letters(const Substitution& sub, Side side) {
    if (!sub.seed()) throw Error(ErrorCode::SeedMissing, "occurring letters depend on the seed");
    std::vector<bool> seen(sub.letters(), false);
    std::vector<Letter> stack{sub.seed()->right};
    if (side == Side::two_sided) stack.push_back(sub.seed()->left);
    for (auto a : stack) seen[a] = true;
    while (!stack.empty()) {
        Letter a = stack.back();
        stack.pop_back();
        for (auto b : sub.rule(a))
            if (!seen[b]) {
                seen[b] = true;
                stack.push_back(b);
            }
    }
    std::vector<Letter> out;
    for (std::size_t a = 0; a < seen.size(); ++a)
        if (seen[a]) out.push_back(static_cast<Letter>(a));
    return out;
}

Kernel enumerate_kernel(const Substitution& sub, Side side, const Budget& budget) {
    require_valid(sub);
    if (!sub.seed()) throw Error(ErrorCode::SeedMissing, "the kernel is taken of a seeded fixed point");
    if (!seed_is_fixed(sub)) throw Error(ErrorCode::BadSeed, "the seed is not fixed by the substitution; simplify first");

    Kernel kernel;
    kernel.side = side;
    kernel.occurring = occurring_letters(sub, side);
    const auto cols = columns(sub);
    const unsigned l = sub.length();
    const Window head = fixed_point_window(sub, 0, 15, budget);

    std::map<Word, Candidate> level;
    level.emplace(class_key(ColumnMap::identity(sub.letters()), kernel.occurring),
                  Candidate{ColumnMap::identity(sub.letters()), {}});
    std::set<std::set<Word>> seen_levels;
    std::set<Word> known;

    for (std::size_t e = 0;; ++e) {
        std::set<Word> keys;
        for (const auto& [key, cand] : level) keys.insert(key);
        if (!seen_levels.insert(keys).second) break;

        std::vector<std::pair<Word, const Candidate*>> fresh;
        for (const auto& [key, cand] : level)
            if (!known.count(key)) fresh.emplace_back(key, &cand);
        std::sort(fresh.begin(), fresh.end(),
                  [](const auto& x, const auto& y) { return smaller_offset(x.second->word, y.second->word); });
        for (const auto& [key, cand] : fresh) {
            known.insert(key);
            KernelElement el;
            el.class_map = cand->map;
            el.e = e;
            el.word = cand->word;
            try {
                Index j = 0;
                for (std::size_t t = 0; t < el.word.size(); ++t) j += static_cast<Index>(el.word[t]) * checked_pow(l, t);
                el.j = j;
            } catch (const Error&) {
                el.j.reset();
            }
            for (auto a : head.letters) el.sample.push_back(el.class_map(a));
            kernel.elements.push_back(std::move(el));
            if (kernel.elements.size() > budget.states)
                throw Error(ErrorCode::StateExplosion, "kernel exceeds the state budget");
        }

        std::map<Word, Candidate> next;
        for (const auto& [key, cand] : level) {
            for (unsigned i = 0; i < l; ++i) {
                Candidate child{compose(cand.map, cols[i]), cand.word};
                child.word.push_back(i);
                Word child_key = class_key(child.map, kernel.occurring);
                auto it = next.find(child_key);
                if (it == next.end())
                    next.emplace(std::move(child_key), std::move(child));
                else if (smaller_offset(child.word, it->second.word))
                    it->second = std::move(child);
            }
        }
        level = std::move(next);
        if (seen_levels.size() > budget.states)
            throw Error(ErrorCode::StateExplosion, "kernel levels exceed the state budget");
    }
    return kernel;
}

BruteForceKernel brute_force_kernel(const Window& w, unsigned base, std::size_t e_max, Side side,
                                    std::size_t min_length) {
    if (base < 2) throw Error(ErrorCode::BadBase, "base must be at least 2");
    Index step_max = 0;
    try {
        step_max = checked_pow(base, e_max);
    } catch (const Error&) {
        throw Error(ErrorCode::WindowTooShort, "ℓ^e_max exceeds any window");
    }
    Index from = 0;
    Index count = 0;
    if (side == Side::two_sided) {
        Index reach = std::min(-w.lo, w.hi + 1);
        if (w.lo > 0 || reach <= 0) throw Error(ErrorCode::WindowTooShort, "a two-sided window must straddle index 0");
        count = reach / step_max;
        from = -count;
        count *= 2;
    } else {
        if (w.lo > 0) throw Error(ErrorCode::WindowTooShort, "a one-sided window must start at or before index 0");
        count = (w.hi + 1) / step_max;
    }
    if (count < static_cast<Index>(std::max<std::size_t>(min_length, 1)))
        throw Error(ErrorCode::WindowTooShort, "depth-" + std::to_string(e_max) + " subsequences would have only " +
                                                   std::to_string(count) + " letters");

    BruteForceKernel out;
    out.compared_length = static_cast<std::size_t>(count);
    std::set<Word> distinct;
    Index step = 1;
    for (std::size_t e = 0; e <= e_max; ++e, step *= base) {
        for (Index j = 0; j < step; ++j) {
            Word content;
            content.reserve(static_cast<std::size_t>(count));
            for (Index n = from; n < from + count; ++n) content.push_back(w[step * n + j]);
            if (distinct.insert(std::move(content)).second) out.representatives.emplace_back(e, j);
        }
    }
    out.count = distinct.size();
    return out;
}

} // namespace substratum
