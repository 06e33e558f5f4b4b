#include <doctest.h>

#include <random>

#include "schreier/ordinal.hpp"

using namespace schreier;

namespace {

Ordinal O(const std::string& s) { return parse_ordinal(s); }

// random ordinal below w^w * 10: optional leading w^w term, then finite-exponent
// terms with strictly decreasing exponents
Ordinal random_small_ordinal(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coin(0, 9);
    Ordinal acc;
    if (coin(rng) == 0)
        acc = ord_mul(omega_pow(Ordinal::omega()), Ordinal::from_nat(1 + coin(rng) % 9));
    int exp = coin(rng) % 5;
    while (exp >= 0) {
        if (coin(rng) < 6) {
            Ordinal term = ord_mul(omega_pow(Ordinal::from_nat(exp)),
                                   Ordinal::from_nat(1 + coin(rng)));
            acc = ord_add(acc, term);
        }
        --exp;
    }
    return acc;
}

} // namespace

TEST_CASE("ordinal parse/format round-trips") {
    for (const char* s : {"0", "1", "7", "w", "w+1", "w*2+1", "w^2*3+w*5+2", "w^{w}+1",
                          "w^{w^2+1}*4+w^3", "w^{w+1}", "w1"}) {
        Ordinal x = O(s);
        CHECK(format_ordinal(x) == s);
        CHECK(parse_ordinal(format_ordinal(x)) == x);
    }
    CHECK(O("w^1") == O("w"));
    CHECK(O(" w + 1 ") == O("w+1"));
    CHECK_THROWS_AS(O("w^"), ParseError);
    CHECK_THROWS_AS(O("3/2"), ParseError);
    CHECK_THROWS_AS(O("w*0"), ParseError);
}

TEST_CASE("ord_add basics") {
    CHECK(ord_add(O("1"), O("w")) == O("w"));
    CHECK(ord_add(O("w"), O("1")) == O("w+1"));
    // CNF addition oracle by term merge: w^2*2 + (w^2+w) = w^2*3+w
    CHECK(ord_add(O("w^2*2"), O("w^2+w")) == O("w^2*3+w"));
    CHECK(ord_add(O("0"), O("w^2")) == O("w^2"));
    CHECK(ord_add(O("w^2"), O("0")) == O("w^2"));
    CHECK_THROWS_AS(ord_add(O("w1"), O("1")), DomainError);
}

TEST_CASE("ord_mul basics") {
    CHECK(ord_mul(O("w"), O("w")) == O("w^2"));
    CHECK(ord_mul(O("2"), O("w")) == O("w"));
    // (w+1)*2 expanded independently as (w+1)+(w+1)
    CHECK(ord_mul(O("w+1"), O("2")) == ord_add(O("w+1"), O("w+1")));
    CHECK(ord_mul(O("w+1"), O("2")) == O("w*2+1"));
    CHECK(ord_mul(O("w"), O("0")).is_zero());
    CHECK(ord_mul(O("w^2+3"), O("w")) == O("w^3"));
}

TEST_CASE("omega_pow") {
    CHECK(omega_pow(O("0")) == O("1"));
    CHECK(omega_pow(O("1")) == O("w"));
    CHECK(omega_pow(O("w")) == O("w^{w}"));
}

TEST_CASE("ord_cmp") {
    CHECK(ord_cmp(O("w"), O("w+1")) < 0);
    CHECK(ord_cmp(O("w^2"), O("w*5")) > 0);
    CHECK(ord_cmp(O("w^2+w"), O("w^2+w")) == 0);
    CHECK(O("w1") > O("w^{w^{w}}"));
}

TEST_CASE("lambda_of") {
    CHECK(lambda_of(O("w^2*3+w*5+2")) == O("w^2"));
    CHECK(lambda_of(O("0")).is_zero());
    CHECK(lambda_of(O("7")) == O("1"));
}

TEST_CASE("left_subtract") {
    CHECK(left_subtract(O("1"), O("w")) == O("w"));
    CHECK(left_subtract(O("w"), O("w*2")) == O("w"));
    CHECK(left_subtract(O("w"), O("w+3")) == O("3"));
    CHECK(left_subtract(O("w^2+w"), O("w^2+w")).is_zero());
    CHECK_THROWS_AS(left_subtract(O("w^2"), O("w")), DomainError);
}

TEST_CASE("classification and predecessor") {
    CHECK(O("0").is_zero());
    CHECK(O("5").is_successor());
    CHECK(O("w").is_limit());
    CHECK(O("w+1").is_successor());
    CHECK(O("w^2*4").is_limit());
    CHECK(predecessor(O("w+1")) == O("w"));
    CHECK(predecessor(O("5")) == O("4"));
    CHECK_THROWS_AS(predecessor(O("w")), DomainError);
}

TEST_CASE("fundamental sequences") {
    CHECK(fundamental(O("w"), 3) == O("3"));
    CHECK(fundamental(O("w^2"), 3) == O("w*3"));
    CHECK(fundamental(O("w^{w}"), 2) == O("w^2"));
    CHECK(fundamental(O("w*2"), 4) == O("w+4"));
    CHECK(fundamental(O("w^{w}*2+w^3"), 5) == O("w^{w}*2+w^2*5"));
    CHECK_THROWS_AS(fundamental(O("0"), 1), DomainError);
    CHECK_THROWS_AS(fundamental(O("w+1"), 1), DomainError);
}

TEST_CASE("arithmetic properties on random ordinals") {
    std::mt19937_64 rng(20240817u);
    for (int trial = 0; trial < 10000; ++trial) {
        Ordinal a = random_small_ordinal(rng);
        Ordinal b = random_small_ordinal(rng);
        Ordinal c = random_small_ordinal(rng);
        REQUIRE(ord_add(ord_add(a, b), c) == ord_add(a, ord_add(b, c)));
        REQUIRE(ord_mul(ord_mul(a, b), c) == ord_mul(a, ord_mul(b, c)));
        // left cancellation
        REQUIRE(left_subtract(a, ord_add(a, b)) == b);
        // strict monotonicity in the right argument
        if (a < b) REQUIRE(ord_add(c, a) < ord_add(c, b));
        // lambda is idempotent and monotone
        REQUIRE(lambda_of(lambda_of(a)) == lambda_of(a));
        if (a <= b) REQUIRE(lambda_of(a) <= lambda_of(b));
        // format round-trip
        REQUIRE(parse_ordinal(format_ordinal(a)) == a);
    }
}

TEST_CASE("fundamental sequence is increasing with supremum below x") {
    std::mt19937_64 rng(7u);
    for (int trial = 0; trial < 2000; ++trial) {
        Ordinal a = random_small_ordinal(rng);
        if (!a.is_limit()) continue;
        for (std::uint64_t n = 1; n <= 6; ++n) {
            REQUIRE(fundamental(a, n) < fundamental(a, n + 1));
            REQUIRE(fundamental(a, n + 1) < a);
        }
    }
}
