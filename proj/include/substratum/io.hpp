#pragma once

#include <span>
#include <string>
#include <string_view>

#include "substratum/automata.hpp"
#include "substratum/dfao.hpp"
#include "substratum/substitution.hpp"
#include "substratum/toeplitz.hpp"
#include "substratum/window.hpp"

namespace substratum {

/// Reads {"alphabet":[…], "length":ℓ, "rules":{letter: "word" | [symbols]},
/// "seed":[a_l, a_r]} and validates it. Throws InvalidInput on malformed JSON
/// and the validation errors otherwise.
Substitution parse_substitution(std::string_view json_text);
Substitution load_substitution(const std::string& path);
std::string to_json(const Substitution& sub);

/// {"states", "ell", "delta", "initial", "outputs", "reading"} plus the
/// output "alphabet" so that letter order survives a round trip.
std::string to_json(const Dfao& m);
/// Throws InvalidInput.
Dfao dfao_from_json(std::string_view json_text);

/// States in BFS order from the initial states, parallel edges merged into
/// one comma-joined label, initial arrows labelled ℕ₀ and −ℕ.
std::string to_dot(const Dfao& m);
std::string to_dot(const ReducedGraph& g, const SemigroupAutomaton& automaton);

/// Two lines: the letters and a caret under index 0 (when inside).
std::string render_window(const Window& w, const Alphabet& alphabet);

/// Integers with a typographic minus sign, "−1".
std::string format_index(Index n);
/// "Aper ∩ [lo,hi] = {…}".
std::string aper_summary(Index lo, Index hi, std::span<const Index> aperiodic);

} // namespace substratum
