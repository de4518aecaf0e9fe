#include <catch_amalgamated.hpp>

#include "substratum/error.hpp"
#include "substratum/io.hpp"
#include "support.hpp"

using namespace substratum;
using namespace fixtures;

namespace {

ErrorCode parse_error(std::string_view text) {
    try {
        parse_substitution(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("parsed without error: " << text);
    return ErrorCode::InvalidInput;
}

bool contains(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

} // namespace

TEST_CASE("substitution files") {
    const auto pd = parse_substitution(R"({"alphabet":["a","b"],"length":2,"rules":{"a":"ab","b":"aa"},"seed":["a","a"]})");
    CHECK(pd == period_doubling());
    const auto arrays = parse_substitution(R"({"alphabet":["a","b"],"length":2,"rules":{"a":["a","b"],"b":["a","a"]}})");
    CHECK(arrays == make(pd_rules));
    const auto multi = parse_substitution(R"({"alphabet":["x1","x2"],"length":2,"rules":{"x1":"x1x2","x2":["x1","x1"]}})");
    CHECK(multi.rule(0) == Word{0, 1});
    CHECK(load_substitution(std::string(SUBSTRATUM_DATA_DIR) + "/bigdiag.json") == bigdiag());
    CHECK(parse_substitution(to_json(bigdiag())) == bigdiag());
    CHECK(parse_substitution(to_json(make(thue_morse_rules))) == make(thue_morse_rules));

    CHECK(parse_error("{") == ErrorCode::InvalidInput);
    CHECK(parse_error(R"({"alphabet":["a"],"length":2})") == ErrorCode::InvalidInput);
    CHECK(parse_error(R"({"alphabet":["a","b"],"length":2,"rules":{"a":"ab","b":"a"}})") == ErrorCode::RuleLengthMismatch);
    CHECK(parse_error(R"({"alphabet":["a","b"],"length":2,"rules":{"a":"ab","b":"ac"}})") == ErrorCode::UnknownLetter);
    CHECK(parse_error(R"({"alphabet":["a","b"],"length":2,"rules":{"a":"ab"}})") == ErrorCode::InvalidInput);
    CHECK(parse_error(R"({"alphabet":["a","b"],"length":2,"rules":{"a":"ab","b":"aa"},"seed":["a","b"]})") == ErrorCode::BadSeed);
    CHECK(parse_error(R"({"alphabet":["a","a"],"length":2,"rules":{"a":"aa"}})") == ErrorCode::InvalidInput);
    CHECK_THROWS_AS(load_substitution("/nonexistent/file.json"), Error);
}

TEST_CASE("automaton JSON round trip") {
    for (const auto& m : {build_direct(bigdiag()), build_reverse_semigroup(period_doubling_squared()).machine,
                          build_reverse_semigroup(simplify(bigdiag()).sub).machine}) {
        const std::string text = to_json(m);
        const Dfao back = dfao_from_json(text);
        CHECK(back.state_names == m.state_names);
        CHECK(back.delta == m.delta);
        CHECK(back.initial_nonneg == m.initial_nonneg);
        CHECK(back.initial_neg == m.initial_neg);
        CHECK(back.output_nonneg == m.output_nonneg);
        CHECK(back.output_neg == m.output_neg);
        CHECK(back.reading == m.reading);
        CHECK(to_json(back) == text);
        CHECK(equivalent(m, back).equivalent);
    }
    const std::string text = to_json(build_direct(bigdiag()));
    CHECK(contains(text, R"("ell": 3)"));
    CHECK(contains(text, R"("reading": "direct")"));
    CHECK_THROWS_AS(dfao_from_json(R"({"states":["x"],"ell":2})"), Error);
}

TEST_CASE("DOT export") {
    const std::string dot = to_dot(build_direct(bigdiag()));
    CHECK(contains(dot, R"("a" -> "a" [label="0"];)"));
    CHECK(contains(dot, R"("a" -> "c" [label="1"];)"));
    CHECK(contains(dot, R"("a" -> "b" [label="2"];)"));
    CHECK(contains(dot, R"("b" -> "b" [label="0"];)"));
    CHECK(contains(dot, R"("b" -> "a" [label="1,2"];)"));
    CHECK(contains(dot, R"("c" -> "b" [label="0,1"];)"));
    CHECK(contains(dot, R"("c" -> "a" [label="2"];)"));
    CHECK(contains(dot, R"(init_nonneg -> "a" [label="ℕ₀"];)"));
    CHECK(contains(dot, R"(init_neg -> "b" [label="−ℕ"];)"));
    CHECK(dot == to_dot(build_direct(bigdiag())));

    const ToeplitzAnalyzer an(period_doubling_squared());
    const std::string reduced = to_dot(an.reduced_graph(), an.automaton());
    CHECK(contains(reduced, R"("(a,b)^T" -> "(a,b)^T" [label="3"];)"));
    CHECK_FALSE(contains(reduced, "(a,a)^T"));
}

TEST_CASE("text rendering") {
    const auto pd2 = period_doubling_squared();
    const Window w = fixed_point_window(pd2, -2, 3);
    CHECK(render_window(w, pd2.alphabet()) == "aaabaa\n  ^\n");
    CHECK(format_index(-12) == "−12");
    CHECK(format_index(7) == "7");
    const std::vector<Index> aper{-1};
    CHECK(aper_summary(-100, 100, aper) == "Aper ∩ [−100,100] = {−1}");
}
