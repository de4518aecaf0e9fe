#include "substratum/io.hpp"

#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "substratum/error.hpp"

namespace substratum {

using ojson = nlohmann::ordered_json;

namespace {

ojson parse_json(std::string_view text) {
    try {
        return ojson::parse(text);
    } catch (const ojson::parse_error& e) {
        throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
}

template <typename T>
T field(const ojson& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::InvalidInput, std::string("missing key \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const ojson::exception&) {
        throw Error(ErrorCode::InvalidInput, std::string("key \"") + key + "\" has the wrong type");
    }
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

/// BFS from the initial states; unreachable states follow in index order.
std::vector<StateId> bfs_order(const Dfao& m) {
    std::vector<bool> seen(m.size(), false);
    std::vector<StateId> order;
    std::deque<StateId> queue;
    auto visit = [&](StateId s) {
        if (seen[s]) return;
        seen[s] = true;
        order.push_back(s);
        queue.push_back(s);
    };
    visit(m.initial_nonneg);
    if (m.initial_neg) visit(*m.initial_neg);
    while (!queue.empty()) {
        StateId s = queue.front();
        queue.pop_front();
        for (Digit d = 0; d < m.base; ++d) visit(m.next(s, d));
    }
    for (StateId s = 0; s < m.size(); ++s)
        if (!seen[s]) order.push_back(s);
    return order;
}

std::string digit_label(const std::vector<Digit>& digits) {
    std::string label;
    for (std::size_t i = 0; i < digits.size(); ++i) label += (i ? "," : "") + std::to_string(digits[i]);
    return label;
}

} // namespace

Substitution parse_substitution(std::string_view json_text) {
    const ojson j = parse_json(json_text);
    if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "a substitution is a JSON object");
    Alphabet alphabet(field<std::vector<std::string>>(j, "alphabet"));
    const auto length = field<long long>(j, "length");
    if (length < 2) throw Error(ErrorCode::BadBase, "length must be at least 2");
    if (!j.contains("rules") || !j.at("rules").is_object()) throw Error(ErrorCode::InvalidInput, "\"rules\" must be an object");
    std::vector<Word> rules(alphabet.size());
    std::vector<bool> given(alphabet.size(), false);
    for (const auto& [key, value] : j.at("rules").items()) {
        const Letter a = alphabet.letter(key);
        if (given[a]) throw Error(ErrorCode::InvalidInput, "duplicate rule for " + key);
        given[a] = true;
        if (value.is_string()) {
            rules[a] = alphabet.tokenize(value.get<std::string>());
        } else if (value.is_array()) {
            for (const auto& sym : value) {
                if (!sym.is_string()) throw Error(ErrorCode::InvalidInput, "rule symbols must be strings");
                rules[a].push_back(alphabet.letter(sym.get<std::string>()));
            }
        } else {
            throw Error(ErrorCode::InvalidInput, "rule for " + key + " must be a string or an array");
        }
    }
    for (std::size_t a = 0; a < given.size(); ++a)
        if (!given[a]) throw Error(ErrorCode::InvalidInput, "no rule for " + alphabet.symbol(static_cast<Letter>(a)));
    std::optional<Seed> seed;
    if (j.contains("seed") && !j.at("seed").is_null()) {
        auto pair = field<std::vector<std::string>>(j, "seed");
        if (pair.size() != 2) throw Error(ErrorCode::InvalidInput, "seed must be a two-element array [a_l, a_r]");
        seed = Seed{alphabet.letter(pair[0]), alphabet.letter(pair[1])};
    }
    Substitution sub(std::move(alphabet), static_cast<unsigned>(length), std::move(rules), seed);
    require_valid(sub);
    return sub;
}

Substitution load_substitution(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_substitution(buffer.str());
}

std::string to_json(const Substitution& sub) {
    ojson j;
    j["alphabet"] = sub.alphabet().symbols();
    j["length"] = sub.length();
    ojson rules = ojson::object();
    for (std::size_t a = 0; a < sub.letters(); ++a) {
        ojson word = ojson::array();
        for (auto b : sub.rule(static_cast<Letter>(a))) word.push_back(sub.alphabet().symbol(b));
        rules[sub.alphabet().symbol(static_cast<Letter>(a))] = std::move(word);
    }
    j["rules"] = std::move(rules);
    if (sub.seed()) j["seed"] = {sub.alphabet().symbol(sub.seed()->left), sub.alphabet().symbol(sub.seed()->right)};
    return j.dump(2);
}

std::string to_json(const Dfao& m) {
    ojson j;
    j["states"] = m.state_names;
    j["ell"] = m.base;
    ojson delta = ojson::object();
    for (StateId s = 0; s < m.size(); ++s) {
        ojson row = ojson::object();
        for (Digit d = 0; d < m.base; ++d) row[std::to_string(d)] = m.state_names[m.next(s, d)];
        delta[m.state_names[s]] = std::move(row);
    }
    j["delta"] = std::move(delta);
    ojson initial = ojson::object();
    initial["nonneg"] = m.state_names[m.initial_nonneg];
    if (m.initial_neg) initial["neg"] = m.state_names[*m.initial_neg];
    j["initial"] = std::move(initial);
    auto outputs_of = [&](const std::vector<Letter>& out) {
        ojson o = ojson::object();
        for (StateId s = 0; s < m.size(); ++s) o[m.state_names[s]] = m.output_alphabet.symbol(out[s]);
        return o;
    };
    ojson outputs = ojson::object();
    outputs["nonneg"] = outputs_of(m.output_nonneg);
    if (m.initial_neg) outputs["neg"] = outputs_of(m.output_neg);
    j["outputs"] = std::move(outputs);
    j["reading"] = std::string(to_string(m.reading));
    j["alphabet"] = m.output_alphabet.symbols();
    return j.dump(2);
}

Dfao dfao_from_json(std::string_view json_text) {
    const ojson j = parse_json(json_text);
    Dfao m;
    m.state_names = field<std::vector<std::string>>(j, "states");
    m.base = field<unsigned>(j, "ell");
    if (m.base < 2) throw Error(ErrorCode::BadBase, "ell must be at least 2");
    const auto reading = field<std::string>(j, "reading");
    if (reading == "direct")
        m.reading = Reading::direct;
    else if (reading == "reverse")
        m.reading = Reading::reverse;
    else
        throw Error(ErrorCode::InvalidInput, "reading must be \"direct\" or \"reverse\"");

    std::map<std::string, StateId> id;
    for (StateId s = 0; s < m.state_names.size(); ++s)
        if (!id.emplace(m.state_names[s], s).second) throw Error(ErrorCode::InvalidInput, "duplicate state " + m.state_names[s]);
    auto state = [&](const std::string& name) {
        auto it = id.find(name);
        if (it == id.end()) throw Error(ErrorCode::InvalidInput, "unknown state " + name);
        return it->second;
    };

    const auto delta = field<ojson>(j, "delta");
    m.delta.assign(m.state_names.size() * m.base, 0);
    for (StateId s = 0; s < m.state_names.size(); ++s) {
        const auto row = field<ojson>(delta, m.state_names[s].c_str());
        for (Digit d = 0; d < m.base; ++d) m.delta[s * m.base + d] = state(field<std::string>(row, std::to_string(d).c_str()));
    }
    const auto initial = field<ojson>(j, "initial");
    m.initial_nonneg = state(field<std::string>(initial, "nonneg"));
    if (initial.contains("neg")) m.initial_neg = state(field<std::string>(initial, "neg"));

    const auto outputs = field<ojson>(j, "outputs");
    std::vector<std::string> letters;
    if (j.contains("alphabet")) {
        letters = field<std::vector<std::string>>(j, "alphabet");
    } else {
        std::set<std::string> seen;
        for (const auto& side : {"nonneg", "neg"})
            if (outputs.contains(side))
                for (const auto& [k, v] : outputs.at(side).items())
                    if (v.is_string()) seen.insert(v.get<std::string>());
        letters.assign(seen.begin(), seen.end());
    }
    m.output_alphabet = Alphabet(letters);
    auto read_outputs = [&](const char* side) {
        const auto o = field<ojson>(outputs, side);
        std::vector<Letter> out(m.state_names.size());
        for (StateId s = 0; s < m.state_names.size(); ++s)
            out[s] = m.output_alphabet.letter(field<std::string>(o, m.state_names[s].c_str()));
        return out;
    };
    m.output_nonneg = read_outputs("nonneg");
    if (m.initial_neg) m.output_neg = read_outputs("neg");
    m.check();
    return m;
}

std::string to_dot(const Dfao& m) {
    std::ostringstream out;
    out << "digraph dfao {\n  rankdir=LR;\n  node [shape=circle];\n";
    out << "  init_nonneg [shape=point];\n";
    if (m.initial_neg) out << "  init_neg [shape=point];\n";
    const auto order = bfs_order(m);
    for (auto s : order) {
        std::string label = m.state_names[s];
        if (m.reading == Reading::reverse) {
            label += "\\n" + m.output_alphabet.symbol(m.output_nonneg[s]);
            if (m.initial_neg) label += " / " + m.output_alphabet.symbol(m.output_neg[s]);
        }
        out << "  " << quote(m.state_names[s]) << " [label=" << quote(label) << "];\n";
    }
    out << "  init_nonneg -> " << quote(m.state_names[m.initial_nonneg]) << " [label=\"ℕ₀\"];\n";
    if (m.initial_neg) out << "  init_neg -> " << quote(m.state_names[*m.initial_neg]) << " [label=\"−ℕ\"];\n";
    for (auto s : order) {
        std::vector<StateId> targets;
        std::map<StateId, std::vector<Digit>> by_target;
        for (Digit d = 0; d < m.base; ++d) {
            StateId t = m.next(s, d);
            if (!by_target.count(t)) targets.push_back(t);
            by_target[t].push_back(d);
        }
        for (auto t : targets)
            out << "  " << quote(m.state_names[s]) << " -> " << quote(m.state_names[t]) << " [label="
                << quote(digit_label(by_target[t])) << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const ReducedGraph& g, const SemigroupAutomaton& automaton) {
    const Dfao& m = automaton.machine;
    std::ostringstream out;
    out << "digraph reduced {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (auto s : g.vertices) out << "  " << quote(m.state_names[s]) << ";\n";
    std::vector<std::pair<StateId, StateId>> pairs;
    std::map<std::pair<StateId, StateId>, std::vector<Digit>> labels;
    for (const auto& e : g.edges) {
        auto key = std::make_pair(e.from, e.to);
        if (!labels.count(key)) pairs.push_back(key);
        labels[key].push_back(e.digit);
    }
    for (const auto& key : pairs)
        out << "  " << quote(m.state_names[key.first]) << " -> " << quote(m.state_names[key.second])
            << " [label=" << quote(digit_label(labels[key])) << "];\n";
    out << "}\n";
    return out.str();
}

std::string render_window(const Window& w, const Alphabet& alphabet) {
    std::string letters, caret;
    for (Index n = w.lo; n <= w.hi; ++n) {
        const std::string& sym = alphabet.symbol(w[n]);
        letters += sym;
        caret += std::string(sym.size(), n == 0 ? '^' : ' ');
    }
    while (!caret.empty() && caret.back() == ' ') caret.pop_back();
    return caret.empty() ? letters + "\n" : letters + "\n" + caret + "\n";
}

std::string format_index(Index n) {
    if (n >= 0) return std::to_string(n);
    std::string digits = std::to_string(n);
    return "−" + digits.substr(1);
}

std::string aper_summary(Index lo, Index hi, std::span<const Index> aperiodic) {
    std::string s = "Aper ∩ [" + format_index(lo) + "," + format_index(hi) + "] = {";
    for (std::size_t i = 0; i < aperiodic.size(); ++i) s += (i ? ", " : "") + format_index(aperiodic[i]);
    return s + "}";
}

} // namespace substratum
