#include <catch_amalgamated.hpp>

#include "substratum/digits.hpp"
#include "substratum/error.hpp"

using namespace substratum;

namespace {

DigitString nonneg(std::vector<Digit> d) { return {std::move(d), Sign::nonneg}; }
DigitString neg(std::vector<Digit> d) { return {std::move(d), Sign::neg}; }

/// Value of a digit word read as (ℓ−1)^∞ d_k … d_0 or plain d_k … d_0,
/// accumulated independently of the library.
Index reference_value(const DigitString& ds, Index base) {
    Index v = 0, scale = 1;
    for (auto it = ds.digits.rbegin(); it != ds.digits.rend(); ++it, scale *= base) v += *it * scale;
    return ds.sign == Sign::neg ? v - scale : v;
}

} // namespace

TEST_CASE("canonical expansions of small integers") {
    CHECK(to_digits(3, 2) == nonneg({1, 1}));
    CHECK(to_digits(0, 7) == nonneg({}));
    CHECK(to_digits(-1, 4) == neg({3}));
    CHECK(to_digits(-5, 2) == neg({1, 0, 1, 1}));
    CHECK(to_digits(-4, 4) == neg({3, 0}));
    CHECK(to_digits(-2, 3) == neg({2, 1}));
    CHECK_THROWS_AS(to_digits(5, 1), Error);
}

TEST_CASE("to_int inverts to_digits and rejects padding") {
    CHECK(to_int(nonneg({1, 1}), 2) == 3);
    CHECK(to_int(neg({3}), 4) == -1);
    CHECK(to_int(neg({1, 0, 1, 1}), 2) == -5);
    CHECK_THROWS_AS(to_int(nonneg({0, 1}), 2), Error);
    CHECK_THROWS_AS(to_int(neg({3, 3}), 4), Error);
    CHECK_THROWS_AS(to_int(neg({}), 4), Error);
    CHECK_THROWS_AS(to_int(neg({2}), 4), Error);
    CHECK_THROWS_AS(to_int(nonneg({4}), 4), Error);
}

TEST_CASE("round trip, canonicity and successor over a range") {
    for (unsigned base : {2u, 3u, 4u, 9u, 10u, 16u}) {
        for (Index n = -100'000; n <= 100'000; ++n) {
            const DigitString ds = to_digits(n, base);
            REQUIRE(is_canonical(ds, base));
            REQUIRE(reference_value(ds, base) == n);
            REQUIRE(to_int(ds, base) == n);
        }
    }
}

TEST_CASE("padding keeps the value") {
    CHECK(pad(nonneg({1, 1}), 4, 2) == nonneg({0, 0, 1, 1}));
    CHECK(pad(neg({3}), 3, 4) == neg({3, 3, 3}));
    CHECK(pad(nonneg({}), 2, 5) == nonneg({0, 0}));
    for (unsigned base : {2u, 3u, 4u}) {
        for (Index n = -2000; n <= 2000; ++n) {
            const DigitString ds = to_digits(n, base);
            for (std::size_t extra = 0; extra < 4; ++extra) {
                const DigitString p = pad(ds, ds.digits.size() + extra, base);
                REQUIRE(padded_value(p, base) == n);
                REQUIRE(reference_value(p, base) == n);
            }
        }
    }
}

TEST_CASE("digit length") {
    CHECK(digit_length(0, 4) == 0);
    CHECK(digit_length(7, 4) == 2);
    CHECK(digit_length(-1, 4) == 0);
    CHECK(digit_length(-5, 2) == 3);
    std::size_t prev = 0;
    for (Index n = 0; n < 5000; ++n) {
        REQUIRE(digit_length(n, 3) >= prev);
        prev = digit_length(n, 3);
    }
}

TEST_CASE("rendering") {
    CHECK(render(nonneg({1, 1}), 2) == "11");
    CHECK(render(neg({3}), 4) == "~3·");
    CHECK(render(neg({1, 0, 1, 1}), 2) == "~1·011");
    CHECK(render(to_digits(11 * 16 + 2, 16), 16) == "11,2");
}

TEST_CASE("checked arithmetic") {
    CHECK(checked_pow(4, 3) == 64);
    CHECK(checked_pow(9, 0) == 1);
    CHECK_THROWS_AS(checked_pow(10, 40), Error);
    CHECK(floor_mod(-1, 4) == 3);
    CHECK(floor_mod(-8, 4) == 0);
    CHECK(floor_mod(9, 4) == 1);
}
