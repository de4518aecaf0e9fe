#include "substratum/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "substratum/error.hpp"
#include "substratum/substitution.hpp"

namespace substratum {

namespace {

bool sorted_contains(const std::vector<ColumnMap>& v, const ColumnMap& m) {
    return std::binary_search(v.begin(), v.end(), m);
}

// Every product of one or more generators, unsorted.
std::vector<ColumnMap> saturate(std::span<const ColumnMap> generators, const Budget& budget) {
    std::unordered_map<ColumnMap, std::uint32_t> seen;
    std::vector<ColumnMap> elements;
    auto add = [&](ColumnMap m) {
        if (seen.emplace(m, static_cast<std::uint32_t>(elements.size())).second) {
            elements.push_back(std::move(m));
            if (elements.size() > budget.states)
                throw Error(ErrorCode::StateExplosion, "semigroup exceeds " + std::to_string(budget.states) + " elements");
        }
    };
    for (const auto& g : generators) add(g);
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (const auto& g : generators) add(compose(elements[i], g));
    return elements;
}

} // namespace

bool SemigroupClosure::contains(const ColumnMap& m) const { return sorted_contains(elements, m); }

SemigroupClosure closure(std::span<const ColumnMap> generators, const Budget& budget) {
    if (generators.empty()) throw Error(ErrorCode::InvalidInput, "closure of an empty generator set");
    for (const auto& g : generators)
        if (g.size() != generators.front().size()) throw Error(ErrorCode::InvalidInput, "generators act on different alphabets");
    SemigroupClosure c;
    c.generators.assign(generators.begin(), generators.end());
    c.elements = saturate(generators, budget);
    std::sort(c.elements.begin(), c.elements.end());
    c.contains_id = std::any_of(c.elements.begin(), c.elements.end(), [](const ColumnMap& m) { return m.is_identity(); });
    c.min_rank = c.elements.front().rank();
    for (const auto& m : c.elements) c.min_rank = std::min(c.min_rank, m.rank());
    return c;
}

std::size_t min_rank(const SemigroupClosure& c) { return c.min_rank; }

bool LengthSet::contains(std::size_t k) const {
    if (k >= threshold) k = threshold + (k - threshold) % period;
    return initial[k];
}

bool LengthSet::hits_every_modulus() const {
    // Large multiples of n·period are ≡ 0 (mod period) and lie past the
    // threshold, so a positive multiple of every n exists iff the periodic
    // part contains the residue 0.
    std::size_t k = period;
    while (k < threshold || k == 0) k += period;
    return contains(k);
}

long GradedReachability::index_of(const ColumnMap& m) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), m);
    if (it == elements.end() || *it != m) return -1;
    return it - elements.begin();
}

const std::vector<std::uint32_t>& GradedReachability::layer(std::size_t k) const {
    if (k >= threshold) k = threshold + (k - threshold) % period;
    return layers[k];
}

std::vector<ColumnMap> GradedReachability::monoid_of_power(std::size_t n) const {
    std::vector<bool> in(elements.size(), false);
    in[static_cast<std::size_t>(index_of(ColumnMap::identity(elements.front().size())))] = true;
    // Past the threshold the layers nq repeat with period dividing `period`.
    const std::size_t q_max = threshold / n + period + 1;
    for (std::size_t q = 1; q <= q_max; ++q)
        for (auto e : layer(n * q)) in[e] = true;
    std::vector<ColumnMap> out;
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (in[i]) out.push_back(elements[i]);
    return out;
}

GradedReachability graded_reachability(std::span<const ColumnMap> generators, const Budget& budget) {
    if (generators.empty()) throw Error(ErrorCode::InvalidInput, "graded reachability without generators");
    GradedReachability g;
    g.generators.assign(generators.begin(), generators.end());
    g.elements = saturate(generators, budget);
    const ColumnMap id = ColumnMap::identity(generators.front().size());
    if (std::find(g.elements.begin(), g.elements.end(), id) == g.elements.end()) g.elements.push_back(id);
    std::sort(g.elements.begin(), g.elements.end());

    const std::size_t n = g.elements.size();
    const std::size_t gens = generators.size();
    std::vector<std::uint32_t> right(n * gens);
    for (std::size_t e = 0; e < n; ++e)
        for (std::size_t i = 0; i < gens; ++i)
            right[e * gens + i] = static_cast<std::uint32_t>(g.index_of(compose(g.elements[e], generators[i])));

    std::map<std::vector<bool>, std::size_t> first_seen;
    std::vector<bool> current(n, false);
    current[static_cast<std::size_t>(g.index_of(id))] = true;
    for (std::size_t k = 0;; ++k) {
        if (auto [it, fresh] = first_seen.emplace(current, k); !fresh) {
            g.threshold = it->second;
            g.period = k - it->second;
            break;
        }
        if (k + 1 > budget.states) throw Error(ErrorCode::StateExplosion, "layer sequence did not cycle within the budget");
        std::vector<std::uint32_t> members;
        for (std::size_t e = 0; e < n; ++e)
            if (current[e]) members.push_back(static_cast<std::uint32_t>(e));
        g.layers.push_back(members);
        std::vector<bool> next(n, false);
        for (auto e : members)
            for (std::size_t i = 0; i < gens; ++i) next[right[e * gens + i]] = true;
        current = std::move(next);
    }

    const std::size_t span = g.threshold + g.period;
    g.lengths.assign(n, LengthSet{std::vector<bool>(span, false), g.threshold, g.period});
    for (std::size_t k = 0; k < span; ++k)
        for (auto e : g.layers[k]) g.lengths[e].initial[k] = true;
    return g;
}

GradedReachability graded_reachability(const Substitution& sub, const Budget& budget) {
    return graded_reachability(columns(sub), budget);
}

bool StructureSemigroup::contains(const ColumnMap& m) const { return sorted_contains(elements, m); }

StructureSemigroup structure_semigroup(const GradedReachability& graded) {
    StructureSemigroup s;
    for (std::size_t e = 0; e < graded.elements.size(); ++e)
        if (graded.elements[e].is_identity() || graded.lengths[e].hits_every_modulus()) s.elements.push_back(graded.elements[e]);

    // Scan n upwards, checking ⟨id, θ^n_i⟩ ⊆ ⟨id, θ^d_i⟩ for each divisor d.
    std::map<std::size_t, std::vector<ColumnMap>> monoids;
    for (std::size_t n = 1;; ++n) {
        auto& m = monoids[n] = graded.monoid_of_power(n);
        for (std::size_t d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            const auto& md = monoids[d];
            if (!std::includes(md.begin(), md.end(), m.begin(), m.end()))
                s.diagnostics.push_back("<id, theta^" + std::to_string(n) + "_i> is not contained in <id, theta^" + std::to_string(d) + "_i>");
        }
        if (m == s.elements) {
            s.stabilizing_exponent = n;
            break;
        }
    }
    return s;
}

StructureSemigroup structure_semigroup(const Substitution& sub, const Budget& budget) {
    return structure_semigroup(graded_reachability(sub, budget));
}

} // namespace substratum
