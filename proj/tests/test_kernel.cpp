#include <catch_amalgamated.hpp>

#include "substratum/automata.hpp"
#include "substratum/error.hpp"
#include "substratum/kernel.hpp"
#include "substratum/oracle.hpp"
#include "support.hpp"

using namespace substratum;
using namespace fixtures;

TEST_CASE("period doubling kernel") {
    const auto k = enumerate_kernel(period_doubling_squared(), Side::one_sided);
    REQUIRE(k.size() == 3);
    CHECK(k.elements[0].class_map.is_identity());
    CHECK(k.elements[0].e == 0);
    CHECK(k.elements[1].class_map == ColumnMap({0, 0}));
    CHECK(k.elements[1].j == 0);
    CHECK(k.elements[2].class_map == ColumnMap({1, 1}));
    CHECK(k.elements[2].j == 1);
    CHECK(period_doubling_squared().alphabet().spell(k.elements[0].sample) == "abaaabababaaabaa");
    CHECK(enumerate_kernel(period_doubling_squared(), Side::two_sided).size() == 3);
}

TEST_CASE("constant substitution has a one-element kernel") {
    const auto k = enumerate_kernel(make({{'a', "aa"}}, std::pair{'a', 'a'}));
    CHECK(k.size() == 1);
}

TEST_CASE("kernel witnesses are exact") {
    for (const auto& sub : {period_doubling_squared(), simplify(bigdiag()).sub, simplify(height_two()).sub}) {
        const auto k = enumerate_kernel(sub);
        std::size_t deepest = 0;
        for (const auto& el : k.elements) deepest = std::max(deepest, el.e);
        const Window w = expand(sub, static_cast<unsigned>(deepest + 2));
        for (const auto& el : k.elements) {
            REQUIRE(el.j);
            const Index step = checked_pow(sub.length(), el.e);
            for (Index n = -5; n < 5; ++n) REQUIRE(el.class_map(w.at(n)) == w.at(step * n + *el.j));
            for (std::size_t i = 1; i < k.size(); ++i)
                REQUIRE(std::pair(k.elements[i - 1].e, *k.elements[i - 1].j) < std::pair(k.elements[i].e, *k.elements[i].j));
        }
        // Closed under every Λ_i.
        for (const auto& el : k.elements)
            for (std::size_t i = 0; i < sub.length(); ++i) REQUIRE(k.find(compose(el.class_map, column(sub, i))));
    }
}

TEST_CASE("Eilenberg equality") {
    for (const auto& sub : {period_doubling_squared(), simplify(bigdiag()).sub, simplify(height_two()).sub,
                            simplify(thue_morse()).sub}) {
        const auto k = enumerate_kernel(sub, Side::two_sided);
        REQUIRE(k.size() == minimize(build_reverse_semigroup(sub).machine).size());
        REQUIRE(k.size() == minimize(reverse_and_determinize(build_direct(sub))).size());
    }
}

TEST_CASE("brute force kernel") {
    const auto pd2 = period_doubling_squared();
    const Window w = fixed_point_window(pd2, 0, 4095);
    const auto b = brute_force_kernel(w, 4, 5, Side::one_sided);
    CHECK(b.count == 3);
    CHECK(brute_force_kernel(w, 4, 0, Side::one_sided).count == 1);
    CHECK_THROWS_AS(brute_force_kernel(w, 4, 5, Side::one_sided, 16), Error);
    CHECK_THROWS_AS(brute_force_kernel(fixed_point_window(pd2, -10, 10), 4, 5), Error);

    const auto tm = simplify(thue_morse()).sub;
    const Window tw = fixed_point_window(tm, 0, 4095);
    CHECK(brute_force_kernel(tw, 4, 5, Side::one_sided).count == enumerate_kernel(tm, Side::one_sided).size());
}

TEST_CASE("brute force count grows to the symbolic count") {
    for (const auto& [sub, rules, l, r] : {std::tuple{period_doubling_squared(), pd2_rules, 'a', 'a'},
                                           std::tuple{simplify(bigdiag()).sub, brute::square(bigdiag_rules), 'b', 'a'},
                                           std::tuple{simplify(thue_morse()).sub, brute::square(thue_morse_rules), 'a', 'a'}}) {
        const auto symbolic = enumerate_kernel(sub, Side::two_sided).size();
        const std::size_t e_max = sub.length() == 9 ? 3 : 4;
        std::size_t previous = 0, last = 0;
        for (unsigned g = e_max + 1; g <= e_max + 3; ++g) {
            const Window w = expand(sub, g);
            const auto count = brute_force_kernel(w, sub.length(), e_max, Side::two_sided).count;
            REQUIRE(count == brute::kernel_count(brute::fixed_point(rules, l, r, w.lo, w.hi), w.lo, sub.length(), e_max));
            REQUIRE(count >= previous);
            REQUIRE(count <= symbolic);
            previous = last = count;
        }
        CHECK(last == symbolic);
    }
}

TEST_CASE("kernel preconditions") {
    CHECK_THROWS_AS(enumerate_kernel(make(pd2_rules)), Error);
    CHECK_THROWS_AS(enumerate_kernel(bigdiag()), Error);
}
