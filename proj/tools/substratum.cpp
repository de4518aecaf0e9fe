#include <charconv>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "substratum/automata.hpp"
#include "substratum/check.hpp"
#include "substratum/error.hpp"
#include "substratum/io.hpp"
#include "substratum/kernel.hpp"
#include "substratum/oracle.hpp"
#include "substratum/semigroup.hpp"
#include "substratum/toeplitz.hpp"

using namespace substratum;

namespace {

constexpr int exit_invalid = 1;
constexpr int exit_refusal = 2;
constexpr int exit_invariant = 3;

struct Range {
    Index lo = 0;
    Index hi = 0;
};

Index parse_int(std::string_view text) {
    Index v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw Error(ErrorCode::InvalidInput, "not an integer: " + std::string(text));
    return v;
}

Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw Error(ErrorCode::InvalidInput, "range must look like lo..hi");
    Range r{parse_int(std::string_view(text).substr(0, dots)), parse_int(std::string_view(text).substr(dots + 2))};
    if (r.lo > r.hi) throw Error(ErrorCode::InvalidInput, "range is empty");
    return r;
}

std::string symbols(const Alphabet& alphabet, const Word& w) { return alphabet.spell(w); }

std::string seed_text(const Substitution& sub) {
    if (!sub.seed()) return "none";
    return sub.alphabet().symbol(sub.seed()->left) + "·" + sub.alphabet().symbol(sub.seed()->right);
}

void print_table(const Dfao& m, std::ostream& out) {
    out << "reading " << to_string(m.reading) << ", base " << m.base << ", " << m.size() << " states\n";
    for (StateId s = 0; s < m.size(); ++s) {
        out << (s == m.initial_nonneg ? "→" : " ") << (m.initial_neg && s == *m.initial_neg ? "←" : " ") << " "
            << m.state_names[s] << " |";
        for (Digit d = 0; d < m.base; ++d) out << " " << m.state_names[m.next(s, d)];
        out << " | " << m.output_alphabet.symbol(m.output_nonneg[s]);
        if (m.initial_neg) out << " " << m.output_alphabet.symbol(m.output_neg[s]);
        out << "\n";
    }
}

int cmd_validate(const Substitution& sub) {
    std::cout << "ok: " << sub.letters() << " letters, length " << sub.length() << ", seed " << seed_text(sub) << "\n";
    std::cout << "primitive: " << (is_primitive(sub) ? "yes" : "no") << "\n";
    std::cout << "simplified: " << (is_simplified(sub) ? "yes" : "no") << "\n";
    return 0;
}

int cmd_simplify(const Substitution& sub) {
    const auto s = simplify(sub);
    std::cout << "exponent " << s.exponent << "\n" << to_json(s.sub) << "\n";
    return 0;
}

int cmd_fixed_point(const Substitution& input, const Range& r, bool dump) {
    const auto sub = simplify(input).sub;
    const Window w = fixed_point_window(sub, std::min<Index>(r.lo, 0), std::max<Index>(r.hi, 0));
    const Window part = w.slice(r.lo, r.hi);
    if (dump)
        std::cout << render_window(part, sub.alphabet());
    else
        std::cout << symbols(sub.alphabet(), part.letters) << "\n";
    return 0;
}

int cmd_automaton(const Substitution& input, const std::string& reading, const std::string& format, bool simplified,
                  bool minimal, bool determinize) {
    Dfao m;
    if (reading == "direct") {
        m = build_direct(simplified ? simplify(input).sub : input);
    } else {
        const auto sub = simplify(input).sub;
        m = determinize ? reverse_and_determinize(build_direct(sub)) : build_reverse_semigroup(sub).machine;
    }
    if (minimal) m = minimize(m);
    if (format == "dot")
        std::cout << to_dot(m);
    else if (format == "json")
        std::cout << to_json(m) << "\n";
    else
        print_table(m, std::cout);
    return 0;
}

int cmd_kernel(const Substitution& input, std::size_t depth, const std::string& side_name) {
    const auto sub = simplify(input).sub;
    const Side side = side_name == "one" ? Side::one_sided : Side::two_sided;
    const auto k = enumerate_kernel(sub, side);
    std::cout << "e\tj\tclass map\tsample\n";
    for (const auto& el : k.elements) {
        std::cout << el.e << "\t" << (el.j ? std::to_string(*el.j) : "overflow") << "\t" << render(el.class_map, sub.alphabet())
                  << "\t" << symbols(sub.alphabet(), el.sample) << "\n";
    }
    std::cout << "|kernel| = " << k.size() << "\n";
    unsigned g = 1;
    while (checked_pow(sub.length(), g) < checked_pow(sub.length(), depth) * 64) ++g;
    const Window w = side == Side::two_sided ? expand(sub, g) : fixed_point_window(sub, 0, checked_pow(sub.length(), g) - 1);
    const auto b = brute_force_kernel(w, sub.length(), depth, side);
    std::cout << "brute force, e ≤ " << depth << ": " << b.count << " distinct subsequences of " << b.compared_length
              << " letters\n";
    return 0;
}

int cmd_semigroup(const Substitution& input) {
    const auto c = closure(columns(input));
    const auto graded = graded_reachability(input);
    const auto s = structure_semigroup(graded);
    std::cout << "closure of the columns: " << c.elements.size() << " maps, min rank " << c.min_rank
              << (c.contains_id ? ", contains id" : "") << "\n";
    const auto m1 = graded.monoid_of_power(1);
    std::cout << "⟨id, θ_i⟩ (" << m1.size() << "):";
    for (const auto& m : m1) std::cout << " " << render(m, input.alphabet());
    std::cout << "\nS_θ (" << s.elements.size() << "), stabilizing exponent " << s.stabilizing_exponent << ":";
    for (const auto& m : s.elements) std::cout << " " << render(m, input.alphabet());
    std::cout << "\n";
    for (const auto& d : s.diagnostics) std::cout << "diagnostic: " << d << "\n";
    return s.diagnostics.empty() ? 0 : exit_invariant;
}

int cmd_toeplitz(const Substitution& input, const Range& r, bool certify_verdicts) {
    const ToeplitzAnalyzer an(input);
    const auto& sub = an.substitution();
    const auto& a = an.automaton();
    const auto verdicts = an.decide_range(r.lo, r.hi);
    std::optional<CertificationReport> report;
    if (certify_verdicts) report = certify(an, verdicts);

    std::cout << "simplified exponent " << an.simplified_exponent() << ", aperiodicity heuristic passed\n";
    std::cout << "index\tstatus\tperiod\tletter\tstates (+/−)" << (report ? "\toracle" : "") << "\n";
    std::vector<Index> aperiodic;
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        const auto& v = verdicts[i];
        if (!v.periodic) aperiodic.push_back(v.index);
        std::cout << format_index(v.index) << "\t" << (v.periodic ? "periodic" : "aperiodic") << "\t"
                  << (v.periodic ? std::to_string(sub.length()) + "^" + std::to_string(v.exponent) : "-") << "\t"
                  << sub.alphabet().symbol(v.letter) << "\t" << a.machine.state_names[v.positive_state] << " "
                  << a.machine.state_names[v.negative_state];
        if (report) std::cout << "\t" << to_string(report->entries[i].evidence);
        std::cout << "\n";
    }
    if (report) {
        std::cout << "oracle window [" << format_index(report->window_bounds.lo) << ","
                  << format_index(report->window_bounds.hi) << "], " << report->inconsistencies << " inconsistent\n";
    }
    std::cout << aper_summary(r.lo, r.hi, aperiodic) << "\n";
    if (report && report->inconsistencies > 0) return exit_invariant;
    return 0;
}

int cmd_reduced_graph(const Substitution& input, const std::string& format) {
    const ToeplitzAnalyzer an(input);
    const auto g = an.reduced_graph();
    if (format == "dot") {
        std::cout << to_dot(g, an.automaton());
        return 0;
    }
    const auto& names = an.automaton().machine.state_names;
    std::cout << "vertices " << g.vertices.size() << ", removed " << g.removed.size() << ", edges " << g.edges.size()
              << "\n";
    for (const auto& comp : g.components) {
        std::cout << "component:";
        for (auto s : comp) std::cout << " " << names[s];
        std::cout << "\n";
    }
    for (const auto& c : g.cycles) {
        std::cout << "cycle " << names[c.vertices.front()] << " digits";
        for (auto d : c.digits) std::cout << " " << d;
        std::cout << " prefix";
        for (auto d : c.prefix) std::cout << " " << d;
        if (c.address) std::cout << " address " << format_index(*c.address);
        std::cout << "\n";
    }
    if (g.cycles_truncated) std::cout << "cycle list truncated at length " << g.max_cycle_length << "\n";
    return 0;
}

int cmd_check(const Substitution& sub, Index range) {
    CheckOptions options;
    options.range = range;
    bool failed = false;
    for (const auto& r : run_checks(sub, options)) {
        const char* tag = r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL";
        failed |= !r.passed;
        std::cout << tag << "  " << r.name << ": " << r.detail << "\n";
    }
    return failed ? exit_invariant : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constant-length substitutions: semigroups, automata, kernels and Toeplitz periodicity"};
    app.require_subcommand(1);

    std::string file;
    std::string range_text;
    auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "substitution JSON file")->required(); };

    auto* validate_cmd = app.add_subcommand("validate", "check a substitution file");
    add_file(validate_cmd);

    auto* simplify_cmd = app.add_subcommand("simplify", "print the least simplified power");
    add_file(simplify_cmd);

    bool dump = false;
    auto* fixed_cmd = app.add_subcommand("fixed-point", "print u_lo … u_hi of the seeded fixed point");
    add_file(fixed_cmd);
    fixed_cmd->add_option("--range", range_text, "lo..hi")->required();
    fixed_cmd->add_flag("--dump", dump, "mark index 0 with a caret");

    std::string reading = "reverse", format = "table";
    bool simplified = false, minimal = false, determinize = false;
    auto* automaton_cmd = app.add_subcommand("automaton", "build a direct- or reverse-reading automaton");
    add_file(automaton_cmd);
    automaton_cmd->add_option("--reading", reading)->check(CLI::IsMember({"direct", "reverse"}));
    automaton_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "json", "table"}));
    automaton_cmd->add_flag("--simplify", simplified, "simplify before building the direct machine");
    automaton_cmd->add_flag("--minimize", minimal, "minimize the result");
    automaton_cmd->add_flag("--determinize", determinize, "reverse machine by subset construction instead of semigroup labels");

    std::size_t depth = 4;
    std::string side = "two";
    auto* kernel_cmd = app.add_subcommand("kernel", "enumerate the ℓ-kernel");
    add_file(kernel_cmd);
    kernel_cmd->add_option("--depth", depth, "brute-force depth e");
    kernel_cmd->add_option("--side", side)->check(CLI::IsMember({"one", "two"}));

    auto* semigroup_cmd = app.add_subcommand("semigroup", "column closure and structure semigroup");
    add_file(semigroup_cmd);

    bool certify_flag = false;
    auto* toeplitz_cmd = app.add_subcommand("toeplitz", "decide periodic and aperiodic indices");
    add_file(toeplitz_cmd);
    toeplitz_cmd->add_option("--range", range_text, "lo..hi")->required();
    toeplitz_cmd->add_flag("--certify", certify_flag, "cross-check every verdict on an expanded window");

    std::string graph_format = "dot";
    auto* reduced_cmd = app.add_subcommand("reduced-graph", "semigroup automaton without its 1-vertices");
    add_file(reduced_cmd);
    reduced_cmd->add_option("--format", graph_format)->check(CLI::IsMember({"dot", "table"}));

    Index check_range = 1000;
    auto* check_cmd = app.add_subcommand("check", "run every invariant on the input");
    add_file(check_cmd);
    check_cmd->add_option("--range", check_range, "compare indices in [−N, N]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_invalid;
    }

    try {
        const Substitution sub = load_substitution(file);
        if (app.got_subcommand(validate_cmd)) return cmd_validate(sub);
        if (app.got_subcommand(simplify_cmd)) return cmd_simplify(sub);
        if (app.got_subcommand(fixed_cmd)) return cmd_fixed_point(sub, parse_range(range_text), dump);
        if (app.got_subcommand(automaton_cmd)) return cmd_automaton(sub, reading, format, simplified, minimal, determinize);
        if (app.got_subcommand(kernel_cmd)) return cmd_kernel(sub, depth, side);
        if (app.got_subcommand(semigroup_cmd)) return cmd_semigroup(sub);
        if (app.got_subcommand(toeplitz_cmd)) return cmd_toeplitz(sub, parse_range(range_text), certify_flag);
        if (app.got_subcommand(reduced_cmd)) return cmd_reduced_graph(sub, graph_format);
        if (app.got_subcommand(check_cmd)) return cmd_check(sub, check_range);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (is_refusal(e.code())) return exit_refusal;
        if (e.code() == ErrorCode::InvariantViolation) return exit_invariant;
        return exit_invalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_invariant;
    }
    return exit_invalid;
}
