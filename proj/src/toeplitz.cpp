#include "substratum/toeplitz.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "substratum/error.hpp"
#include "substratum/oracle.hpp"

namespace substratum {

namespace {

Simplified gate(const Substitution& sub, const Budget& budget) {
    require_valid(sub);
    if (sub.letters() == 1) throw Error(ErrorCode::Periodic, "a one-letter alphabet gives a constant sequence");
    if (!is_primitive(sub)) throw Error(ErrorCode::NotPrimitive, "the substitution is not primitive");
    const Substitution seeded = sub.seed() ? sub : sub.with_seed(default_seed(sub));
    if (std::size_t c = column_number(seeded, budget); c > 1)
        throw Error(ErrorCode::NotToeplitz, "column number " + std::to_string(c) + " (no coincidence)");
    if (!looks_aperiodic(seeded, budget))
        throw Error(ErrorCode::Periodic, "the fixed point has a short period (heuristic check)");
    if (!sub.seed()) throw Error(ErrorCode::SeedMissing, "periodicity is decided on a seeded fixed point");
    return simplify(sub, budget);
}

/// Iterative Tarjan over the reduced vertices; returns components with a cycle.
std::vector<std::vector<StateId>> cyclic_components(const std::vector<StateId>& vertices,
                                                    const std::vector<std::vector<std::pair<Digit, StateId>>>& out,
                                                    const std::vector<long>& pos) {
    const std::size_t n = vertices.size();
    std::vector<long> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<StateId>> result;
    long counter = 0;
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, edge] = call.back();
            const auto& succ = out[vertices[v]];
            if (edge < succ.size()) {
                std::size_t w = static_cast<std::size_t>(pos[succ[edge].second]);
                ++edge;
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const std::size_t done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] != index[done]) continue;
            std::vector<StateId> comp;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(vertices[w]);
            } while (w != done);
            bool cyclic = comp.size() > 1;
            for (const auto& [d, t] : out[vertices[done]]) cyclic = cyclic || t == vertices[done];
            if (cyclic) {
                std::sort(comp.begin(), comp.end());
                result.push_back(std::move(comp));
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::optional<Index> spelled_integer(const std::vector<Digit>& prefix, const std::vector<Digit>& cycle, unsigned base) {
    const bool zeros = std::all_of(cycle.begin(), cycle.end(), [](Digit d) { return d == 0; });
    const bool tops = std::all_of(cycle.begin(), cycle.end(), [&](Digit d) { return d == base - 1; });
    if (!zeros && !tops) return std::nullopt;
    try {
        Index value = 0;
        for (std::size_t t = 0; t < prefix.size(); ++t) value += static_cast<Index>(prefix[t]) * checked_pow(base, t);
        return zeros ? value : value - checked_pow(base, prefix.size());
    } catch (const Error&) {
        return std::nullopt;
    }
}

} // namespace

std::vector<Index> per_k_window(const Window& w, Index k, Letter a) {
    if (k <= 0) throw Error(ErrorCode::InvalidInput, "period must be positive");
    if (static_cast<Index>(w.size()) < 2 * k) throw Error(ErrorCode::WindowTooShort, "the window covers fewer than two periods");
    std::vector<bool> ok(static_cast<std::size_t>(k), true);
    for (Index i = w.lo; i <= w.hi; ++i)
        if (w[i] != a) ok[static_cast<std::size_t>((i - w.lo) % k)] = false;
    std::vector<Index> out;
    for (Index i = w.lo; i <= w.hi; ++i)
        if (ok[static_cast<std::size_t>((i - w.lo) % k)]) out.push_back(i);
    return out;
}

ToeplitzAnalyzer::ToeplitzAnalyzer(const Substitution& sub, const Budget& budget)
    : simplified_(gate(sub, budget)), automaton_(build_reverse_semigroup(simplified_.sub, budget)) {}

PeriodicityVerdict ToeplitzAnalyzer::decide(Index n, std::size_t extra) const {
    const Dfao& m = automaton_.machine;
    const unsigned l = m.base;
    PeriodicityVerdict v;
    v.index = n;
    v.letter = run(m, n);
    const std::size_t j = digit_length(n, l) + extra;
    for (std::size_t k = j; k <= j + 1; ++k) {
        const Index pk = checked_pow(l, k);
        const Index r = floor_mod(n, pk);
        v.exponent = k;
        v.positive_state = walk(m, m.initial_nonneg, pad(to_digits(r, l), k, l));
        v.negative_state = walk(m, *m.initial_neg, to_digits(r - pk, l));
        if (automaton_.labels[v.positive_state].constant_value() == v.letter &&
            automaton_.labels[v.negative_state].constant_value() == v.letter) {
            v.periodic = true;
            return v;
        }
    }
    return v;
}

std::vector<PeriodicityVerdict> ToeplitzAnalyzer::decide_range(Index lo, Index hi) const {
    std::vector<PeriodicityVerdict> out;
    if (hi < lo) return out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (Index n = lo; n <= hi; ++n) out.push_back(decide(n));
    // Per(u) and Aper(u) partition the range.
    std::size_t periodic = 0, aperiodic = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].index != lo + static_cast<Index>(i))
            throw Error(ErrorCode::InvariantViolation, "verdicts do not cover the range in order");
        (out[i].periodic ? periodic : aperiodic) += 1;
    }
    if (periodic + aperiodic != static_cast<std::size_t>(hi - lo + 1))
        throw Error(ErrorCode::InvariantViolation, "periodic and aperiodic verdicts do not partition the range");
    return out;
}

std::optional<Index> ToeplitzAnalyzer::minimal_period(const PeriodicityVerdict& v) const {
    if (!v.periodic) return std::nullopt;
    const Dfao& m = automaton_.machine;
    const unsigned l = m.base;
    const Index pk = checked_pow(l, v.exponent);
    for (Index p = 1; p <= pk; ++p) {
        if (pk % p != 0) continue;
        bool constant = true;
        for (Index r = floor_mod(v.index, p); r < pk && constant; r += p) {
            StateId s = walk(m, m.initial_nonneg, pad(to_digits(r, l), v.exponent, l));
            constant = automaton_.labels[s].constant_value() == v.letter;
        }
        if (constant) return p;
    }
    return pk;
}

bool ToeplitzAnalyzer::stream_stays_reduced(Index n, std::size_t extra) const {
    const Dfao& m = automaton_.machine;
    const unsigned l = m.base;
    DigitString ds = to_digits(n, l);
    ds = pad(ds, ds.digits.size() + extra + 1, l);
    StateId s = n >= 0 ? m.initial_nonneg : *m.initial_neg;
    if (automaton_.labels[s].rank() < 2) return false;
    for (auto it = ds.digits.rbegin(); it != ds.digits.rend(); ++it) {
        s = m.next(s, *it);
        if (automaton_.labels[s].rank() < 2) return false;
    }
    return true;
}

ReducedGraph ToeplitzAnalyzer::reduced_graph(std::size_t max_cycle_length, std::size_t max_cycles) const {
    const Dfao& m = automaton_.machine;
    const unsigned l = m.base;
    ReducedGraph g;
    g.max_cycle_length = max_cycle_length;
    std::vector<long> pos(m.size(), -1);
    for (StateId s = 0; s < m.size(); ++s) {
        if (automaton_.labels[s].rank() >= 2) {
            pos[s] = static_cast<long>(g.vertices.size());
            g.vertices.push_back(s);
        } else {
            g.removed.push_back(s);
        }
    }
    std::vector<std::vector<std::pair<Digit, StateId>>> out(m.size());
    for (auto s : g.vertices)
        for (Digit d = 0; d < l; ++d) {
            StateId t = m.next(s, d);
            if (pos[t] < 0) continue;
            g.edges.push_back({s, d, t});
            out[s].emplace_back(d, t);
        }
    g.components = cyclic_components(g.vertices, out, pos);

    // Shortest digit paths from the initial state; the descending tree breaks
    // ties toward ℓ−1 so that all-(ℓ−1) cycles get their shortest address.
    auto shortest_paths = [&](bool descending) {
        std::vector<std::optional<std::vector<Digit>>> prefix(m.size());
        if (pos[m.initial_nonneg] < 0) return prefix;
        std::deque<StateId> queue{m.initial_nonneg};
        prefix[m.initial_nonneg] = std::vector<Digit>{};
        while (!queue.empty()) {
            StateId s = queue.front();
            queue.pop_front();
            for (std::size_t e = 0; e < out[s].size(); ++e) {
                const auto& [d, t] = out[s][descending ? out[s].size() - 1 - e : e];
                if (prefix[t]) continue;
                prefix[t] = *prefix[s];
                prefix[t]->push_back(d);
                queue.push_back(t);
            }
        }
        return prefix;
    };
    const auto ascending_prefix = shortest_paths(false);
    const auto descending_prefix = shortest_paths(true);

    std::vector<long> component_of(m.size(), -1);
    for (std::size_t c = 0; c < g.components.size(); ++c)
        for (auto s : g.components[c]) component_of[s] = static_cast<long>(c);

    // Each simple cycle is found once, from its earliest vertex.
    const std::size_t work_limit = 1'000'000;
    std::size_t work = 0;
    for (auto start : g.vertices) {
        if (component_of[start] < 0 || g.cycles_truncated) continue;
        std::vector<StateId> path{start};
        std::vector<Digit> digits;
        std::vector<bool> on_path(m.size(), false);
        on_path[start] = true;
        std::vector<std::size_t> next_edge{0};
        while (!path.empty() && !g.cycles_truncated) {
            StateId v = path.back();
            std::size_t& e = next_edge.back();
            if (e >= out[v].size()) {
                on_path[v] = false;
                path.pop_back();
                next_edge.pop_back();
                if (!digits.empty()) digits.pop_back();
                continue;
            }
            auto [d, t] = out[v][e++];
            if (++work > work_limit) {
                g.cycles_truncated = true;
                break;
            }
            if (t == start) {
                ReducedCycle c;
                c.vertices = path;
                c.digits = digits;
                c.digits.push_back(d);
                const bool tops = std::all_of(c.digits.begin(), c.digits.end(), [&](Digit x) { return x == l - 1; });
                const auto& prefix = tops ? descending_prefix[start] : ascending_prefix[start];
                if (prefix) c.prefix = *prefix;
                c.address = prefix ? spelled_integer(c.prefix, c.digits, l) : std::nullopt;
                g.cycles.push_back(std::move(c));
                if (g.cycles.size() >= max_cycles) g.cycles_truncated = true;
                continue;
            }
            if (on_path[t] || pos[t] < pos[start] || component_of[t] != component_of[start]) continue;
            if (path.size() >= max_cycle_length) {
                g.cycles_truncated = true;
                continue;
            }
            path.push_back(t);
            digits.push_back(d);
            on_path[t] = true;
            next_edge.push_back(0);
        }
    }
    return g;
}

PeriodicityVerdict decide_per(const Substitution& sub, Index n, const Budget& budget) {
    return ToeplitzAnalyzer(sub, budget).decide(n);
}

std::vector<Index> aperiodic_in_range(const Substitution& sub, Index lo, Index hi, const Budget& budget) {
    std::vector<Index> out;
    for (const auto& v : ToeplitzAnalyzer(sub, budget).decide_range(lo, hi))
        if (!v.periodic) out.push_back(v.index);
    return out;
}

ReducedGraph reduced_graph(const Substitution& sub, const Budget& budget) {
    return ToeplitzAnalyzer(sub, budget).reduced_graph();
}

std::string_view to_string(Evidence e) {
    switch (e) {
    case Evidence::certified: return "certified";
    case Evidence::consistent: return "consistent";
    case Evidence::inconsistent: return "inconsistent";
    }
    return "unknown";
}

CertificationReport certify(const ToeplitzAnalyzer& analyzer, std::span<const PeriodicityVerdict> verdicts,
                            std::size_t aperiodic_depth, const Budget& budget) {
    const Substitution& sub = analyzer.substitution();
    const unsigned l = sub.length();
    std::size_t g = std::max<std::size_t>(1, aperiodic_depth + 1);
    Index reach = 0;
    for (const auto& v : verdicts) {
        if (v.periodic) g = std::max(g, v.exponent + 3);
        reach = std::max(reach, v.index < 0 ? -v.index : v.index + 1);
    }
    while (checked_pow(l, g) < reach) ++g;

    CertificationReport report;
    report.generations = static_cast<unsigned>(g);
    const Window w = expand(sub, report.generations, budget);
    report.window_bounds = Window{w.lo, w.hi, {}};
    auto spell = [&](const std::vector<Letter>& letters) {
        std::string s = "{";
        for (std::size_t i = 0; i < letters.size(); ++i) s += (i ? "," : "") + sub.alphabet().symbol(letters[i]);
        return s + "}";
    };
    // One pass per step: each residue class is either unseen (−1), carries a
    // single letter, or carries several (−2).
    std::map<Index, std::vector<std::int16_t>> summaries;
    auto summary = [&](Index step) -> const std::vector<std::int16_t>& {
        auto it = summaries.find(step);
        if (it != summaries.end()) return it->second;
        std::vector<std::int16_t> cls(static_cast<std::size_t>(step), -1);
        for (Index i = w.lo; i <= w.hi; ++i) {
            auto& c = cls[static_cast<std::size_t>(floor_mod(i, step))];
            const std::int16_t a = w[i];
            if (c == -1)
                c = a;
            else if (c != a)
                c = -2;
        }
        return summaries.emplace(step, std::move(cls)).first->second;
    };
    for (const auto& v : verdicts) {
        Certification c;
        c.index = v.index;
        c.periodic = v.periodic;
        if (w.at(v.index) != v.letter) {
            c.evidence = Evidence::inconsistent;
            c.detail = "window letter differs from the automaton output";
        } else if (v.periodic) {
            const Index step = checked_pow(l, v.exponent);
            const bool single = summary(step)[static_cast<std::size_t>(floor_mod(v.index, step))] == v.letter;
            c.evidence = single ? Evidence::consistent : Evidence::inconsistent;
            c.detail = "step " + std::to_string(step) + ": " + spell(sample_progression(w, v.index, step));
        } else {
            c.evidence = Evidence::certified;
            c.detail = "two letters at steps ℓ^0..ℓ^" + std::to_string(aperiodic_depth);
            for (std::size_t k = 0; k <= aperiodic_depth; ++k) {
                const Index step = checked_pow(l, k);
                if (summary(step)[static_cast<std::size_t>(floor_mod(v.index, step))] != -2) {
                    c.evidence = Evidence::inconsistent;
                    c.detail = "step " + std::to_string(step) + ": " + spell(sample_progression(w, v.index, step));
                    break;
                }
            }
        }
        if (c.evidence == Evidence::inconsistent) ++report.inconsistencies;
        report.entries.push_back(std::move(c));
    }
    return report;
}

} // namespace substratum
