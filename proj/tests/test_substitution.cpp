#include <catch_amalgamated.hpp>

#include <numeric>

#include "substratum/error.hpp"
#include "substratum/substitution.hpp"
#include "support.hpp"

using namespace substratum;
using namespace fixtures;

namespace {

ErrorCode code_of(const std::optional<Error>& e) {
    REQUIRE(e.has_value());
    return e->code();
}

std::string spell(const Substitution& s, const Word& w) { return s.alphabet().spell(w); }

std::string vector_notation(const std::string& images) {
    std::string out = "(";
    for (std::size_t i = 0; i < images.size(); ++i) out += (i ? "," : "") + std::string(1, images[i]);
    return out + ")^T";
}

std::set<std::string> column_strings(const Rules& rules) {
    std::set<std::string> g;
    for (std::size_t i = 0; i < rules.begin()->second.size(); ++i) g.insert(brute::column(rules, i));
    return g;
}

} // namespace

TEST_CASE("validation") {
    CHECK_FALSE(validate(period_doubling()));
    CHECK_FALSE(validate(bigdiag()));
    CHECK_FALSE(validate(make(pd_rules)));

    Alphabet ab({"a", "b"});
    CHECK(code_of(validate(Substitution(ab, 2, {{0, 1}, {0}}))) == ErrorCode::RuleLengthMismatch);
    CHECK(code_of(validate(Substitution(ab, 2, {{0, 1}, {0, 5}}))) == ErrorCode::UnknownLetter);
    CHECK(code_of(validate(Substitution(ab, 1, {{0}, {1}}))) == ErrorCode::BadBase);
    CHECK(code_of(validate(make(pd_rules, std::pair{'a', 'b'}))) == ErrorCode::BadSeed);
    CHECK_THROWS_AS(require_valid(make(pd_rules, std::pair{'a', 'b'})), Error);
}

TEST_CASE("columns") {
    const auto pd = period_doubling();
    CHECK(column(pd, 0) == ColumnMap({0, 0}));
    CHECK(column(pd, 1) == ColumnMap({1, 0}));
    CHECK(column(bigdiag(), 2) == ColumnMap({1, 0, 0}));
    CHECK_THROWS_AS(column(pd, 2), Error);
    for (const auto& rules : {pd_rules, bigdiag_rules, thue_morse_rules, height_two_rules}) {
        const auto s = make(rules);
        for (std::size_t i = 0; i < s.length(); ++i)
            REQUIRE(render(column(s, i), s.alphabet()) == vector_notation(brute::column(rules, i)));
    }
}

TEST_CASE("powers") {
    const auto pd2 = power(period_doubling(), 2);
    CHECK(pd2.length() == 4);
    CHECK(spell(pd2, pd2.rule(0)) == "abaa");
    CHECK(spell(pd2, pd2.rule(1)) == "abab");
    CHECK(pd2.seed() == period_doubling().seed());
    CHECK(power(bigdiag(), 1) == bigdiag());
    const auto bd2 = power(bigdiag(), 2);
    CHECK(spell(bd2, bd2.rule(0)) == "acbbbabaa");
    Budget tiny;
    tiny.word_length = 100;
    CHECK_THROWS_AS(power(bigdiag(), 5, tiny), Error);
}

TEST_CASE("columns of a square compose") {
    for (const auto& rules : {pd_rules, bigdiag_rules, height_two_rules}) {
        const auto s = make(rules);
        const auto sq = power(s, 2);
        const unsigned l = s.length();
        for (unsigned i = 0; i < l; ++i)
            for (unsigned j = 0; j < l; ++j) REQUIRE(column(sq, i * l + j) == compose(column(s, j), column(s, i)));
    }
}

TEST_CASE("simplified form") {
    const auto pd = simplify(period_doubling());
    CHECK(pd.exponent == 2);
    CHECK(pd.sub == period_doubling_squared());
    CHECK(is_simplified(pd.sub));
    CHECK(simplify(period_doubling_squared()).exponent == 1);

    // θ_2 = (b,a,a)^T is not idempotent, so bigdiag needs its square.
    CHECK_FALSE(column(bigdiag(), 2).is_idempotent());
    const auto bd = simplify(bigdiag());
    CHECK(bd.exponent == 2);
    CHECK(column(bd.sub, 0).is_idempotent());
    CHECK(column(bd.sub, 8).is_idempotent());
    CHECK(seed_is_fixed(bd.sub));
    CHECK_FALSE(seed_is_fixed(bigdiag()));
}

TEST_CASE("fixed point windows") {
    const auto bd = simplify(bigdiag()).sub;
    CHECK(spell(bd, fixed_point_window(bd, 0, 8).letters) == "acbbbabaa");
    CHECK(spell(bd, fixed_point_window(bd, -1, 0).letters) == "ba");
    const auto pd2 = period_doubling_squared();
    CHECK(spell(pd2, fixed_point_window(pd2, 0, 3).letters) == "abaa");
    CHECK_THROWS_AS(fixed_point_window(bigdiag(), -1, 0), Error);
    CHECK_THROWS_AS(fixed_point_window(make(pd2_rules), -1, 0), Error);

    SECTION("agrees with the string oracle") {
        const auto w = fixed_point_window(bd, -3000, 3000);
        CHECK(spell(bd, w.letters) == brute::fixed_point(brute::square(bigdiag_rules), 'b', 'a', -3000, 3000));
        const auto w2 = fixed_point_window(pd2, -3000, 3000);
        CHECK(spell(pd2, w2.letters) == brute::fixed_point(pd2_rules, 'a', 'a', -3000, 3000));
    }

    SECTION("substitution invariance") {
        for (const auto& s : {bd, pd2, simplify(height_two()).sub}) {
            const Index l = s.length();
            const auto small = fixed_point_window(s, -200, 200);
            const auto big = fixed_point_window(s, -200 * l, 200 * l + l - 1);
            REQUIRE(s.apply(small.letters) == big.letters);
        }
    }
}

TEST_CASE("primitivity") {
    CHECK(is_primitive(period_doubling()));
    CHECK(is_primitive(bigdiag()));
    CHECK_FALSE(is_primitive(make({{'a', "aa"}, {'b', "bb"}})));
    CHECK_FALSE(is_primitive(make({{'a', "ab"}, {'b', "bb"}})));
    for (const auto& rules : {pd_rules, bigdiag_rules, thue_morse_rules, Rules{{'a', "aa"}, {'b', "bb"}}})
        for (unsigned k = 1; k <= 4; ++k) REQUIRE(is_primitive(power(make(rules), k)) == is_primitive(make(rules)));
}

TEST_CASE("height") {
    CHECK(height(period_doubling_squared()) == 1);
    CHECK(height(bigdiag()) == 1);
    CHECK(height(thue_morse()) == 1);
    CHECK(height(height_two()) == 2);
    CHECK_THROWS_AS(height(make(pd_rules)), Error);

    // Oracle: gcd of the return positions of u_0, stripped of factors of ℓ.
    const auto u = brute::fixed_point(brute::square(height_two_rules), 'c', 'a', 0, 20000);
    std::size_t g = 0;
    for (std::size_t i = 1; i < u.size(); ++i)
        if (u[i] == u[0]) g = std::gcd(g, i);
    while (g % 3 == 0) g /= 3;
    CHECK(g == 2);
}

TEST_CASE("column number") {
    CHECK(column_number(period_doubling()) == 1);
    CHECK(column_number(bigdiag()) == 1);
    CHECK(column_number(thue_morse()) == 2);
    CHECK(column_number(make(thue_morse_rules)) == 2);
    CHECK_THROWS_AS(column_number(height_two()), Error);
    for (const auto& rules : {pd_rules, bigdiag_rules, thue_morse_rules}) {
        const auto expected = brute::min_rank(brute::closure(column_strings(rules), brute::letters_of(rules)));
        for (unsigned k = 1; k <= 3; ++k) REQUIRE(column_number(power(make(rules, std::nullopt), k)) == expected);
    }
}

TEST_CASE("default seed and aperiodicity heuristic") {
    const auto s = default_seed(make(pd_rules));
    CHECK_FALSE(validate(make(pd_rules).with_seed(s)));
    CHECK(looks_aperiodic(period_doubling()));
    CHECK(looks_aperiodic(bigdiag()));
    CHECK_FALSE(looks_aperiodic(make({{'a', "ab"}, {'b', "ab"}})));
}
