#include "menon/arith.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numeric>

using namespace menon;

TEST_SUITE_BEGIN("arith");

TEST_CASE("factorize worked values") {
    CHECK(factorize(1).pairs.empty());
    CHECK(factorize(97).pairs == std::vector<PrimePower>{{97, 1}});
    CHECK(factorize(360).pairs == std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
    CHECK_THROWS_AS(factorize(-5), std::invalid_argument);
}

TEST_CASE("factorize then multiply back is the identity on [1, 10^6]") {
    for (std::int64_t n = 1; n <= 1'000'000; ++n) {
        Factorization f = factorize(n);
        REQUIRE(f.value() == n);
        for (std::size_t i = 1; i < f.pairs.size(); ++i) REQUIRE(f.pairs[i - 1].prime < f.pairs[i].prime);
    }
}

TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<std::int64_t>{1});
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(97) == std::vector<std::int64_t>{1, 97});
    for (std::int64_t n = 1; n <= 300; ++n) CHECK(divisors(n) == oracle::divisors(n));
}

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
    for (std::int64_t n = 1; n <= 400; ++n) CHECK(euler_phi(n) == oracle::phi(n));
}

TEST_CASE("phi divisor sum identity up to 10^4") {
    for (std::int64_t n = 1; n <= 10'000; ++n) {
        std::int64_t total = 0;
        for (std::int64_t d : divisors(n)) total += euler_phi(d);
        REQUIRE(total == n);
    }
}

TEST_CASE("mobius divisor sum identity up to 10^4") {
    for (std::int64_t n = 1; n <= 10'000; ++n) {
        int total = 0;
        for (std::int64_t d : divisors(n)) total += mobius(d);
        REQUIRE(total == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("mobius spot values and oracle") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
    for (std::int64_t n = 1; n <= 300; ++n) CHECK(mobius(n) == oracle::mobius(n));
}

TEST_CASE("phi gcd lcm multiplicative relation up to 300") {
    for (std::int64_t a = 1; a <= 300; ++a)
        for (std::int64_t b = 1; b <= 300; ++b)
            REQUIRE(euler_phi(a) * euler_phi(b) ==
                    euler_phi(std::gcd(a, b)) * euler_phi(std::lcm(a, b)));
}

TEST_CASE("jordan phi") {
    CHECK(jordan_phi(2, 6) == Rational(24));
    CHECK(jordan_phi(5, 1) == Rational(1));
    CHECK(jordan_phi(0, 1) == Rational(1));
    CHECK(jordan_phi(0, 5) == Rational(0));
    for (std::int64_t n = 1; n <= 10'000; ++n) REQUIRE(jordan_phi(1, n) == Rational(euler_phi(n)));
    for (std::int64_t n = 1; n <= 100; ++n) {
        CHECK(jordan_phi(2, n) == Rational(oracle::jordan(2, n)));
        if (n <= 30) CHECK(jordan_phi(3, n) == Rational(oracle::jordan(3, n)));
    }
    CHECK_THROWS_AS(jordan_phi(-1, 4), std::invalid_argument);
}

TEST_CASE("sigma") {
    CHECK(sigma(1, 4) == 7);
    CHECK(sigma(1, 6) == 12);
    for (std::int64_t n = 1; n <= 200; ++n) {
        CHECK(sigma(0, n) == tau(n));
        for (int k = 0; k <= 3; ++k) CHECK(sigma(k, n) == oracle::sigma(k, n));
    }
}

TEST_CASE("tau coprime") {
    CHECK(tau_coprime(12, 2) == 2);
    CHECK(tau_coprime(10, 3) == 4);
    for (std::int64_t n = 1; n <= 150; ++n) {
        CHECK(tau_coprime(n, 1) == tau(n));
        CHECK(tau_coprime(n, 0) == 1);
        for (std::int64_t a = -10; a <= 10; ++a) CHECK(tau_coprime(n, a) == oracle::tau_coprime(n, a));
    }
}

TEST_CASE("legendre symbol") {
    CHECK(legendre_symbol(1, 7) == 1);
    CHECK(legendre_symbol(2, 7) == 1);
    CHECK(legendre_symbol(3, 7) == -1);
    CHECK(legendre_symbol(14, 7) == 0);
    CHECK_THROWS_AS(legendre_symbol(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(legendre_symbol(3, 15), std::invalid_argument);
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47})
        for (std::int64_t a = -p; a <= 2 * p; ++a) CHECK(legendre_symbol(a, p) == oracle::legendre(a, p));
}

TEST_CASE("omega") {
    CHECK(omega(1) == 0);
    CHECK(omega(12) == 2);
    CHECK(omega(30) == 3);
}

TEST_CASE("mod floor and pow mod") {
    CHECK(mod_floor(-1, 5) == 4);
    CHECK(mod_floor(10, 5) == 0);
    CHECK(pow_mod(2, 10, 1000) == 24);
    CHECK(pow_mod(-1, 5, 7) == 6);
    CHECK(pow_mod(5, 0, 7) == 1);
    for (std::int64_t b = -9; b <= 9; ++b)
        for (std::int64_t e = 0; e <= 7; ++e)
            for (std::int64_t m = 1; m <= 12; ++m) {
                std::int64_t expected = 1 % m;
                for (int i = 0; i < e; ++i) expected = mod_floor(expected * b, m);
                CHECK(pow_mod(b, e, m) == expected);
            }
}

TEST_CASE("lcm with overflow check") {
    CHECK(lcm_i64(4, 6) == 12);
    CHECK_THROWS_AS(lcm_i64((std::int64_t{1} << 62) - 1, (std::int64_t{1} << 61) - 1), overflow_error);
}

TEST_SUITE_END();
