#include "menon/congruence.hpp"

#include "menon/arith.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>

using namespace menon;

namespace {

PolySystem system_of(std::initializer_list<const char*> texts) {
    PolySystem out;
    for (const char* text : texts) out.polys.push_back(IntPoly::parse(text));
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("congruence");

TEST_CASE("crt worked examples") {
    std::vector<std::pair<std::int64_t, std::int64_t>> a{{1, 2}, {2, 3}};
    auto r = crt_solve(a);
    REQUIRE(r.has_value());
    CHECK(r->residue == 5);
    CHECK(r->modulus == 6);

    std::vector<std::pair<std::int64_t, std::int64_t>> b{{0, 2}, {1, 2}};
    CHECK(!crt_solve(b).has_value());

    std::vector<std::pair<std::int64_t, std::int64_t>> c{{-3, 7}};
    auto single = crt_solve(c);
    REQUIRE(single.has_value());
    CHECK(single->residue == 4);
    CHECK(single->modulus == 7);

    CHECK_THROWS_AS(crt_solve({}), std::invalid_argument);
}

TEST_CASE("crt solutions satisfy every congruence and are unique below the lcm") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::int64_t> mod_dist(1, 16);
    std::uniform_int_distribution<std::int64_t> res_dist(-25, 25);
    for (int trial = 0; trial < 3000; ++trial) {
        std::vector<std::pair<std::int64_t, std::int64_t>> system;
        int len = 1 + static_cast<int>(rng() % 4);
        std::int64_t span = 1;
        for (int i = 0; i < len; ++i) {
            system.emplace_back(res_dist(rng), mod_dist(rng));
            span = std::lcm(span, system.back().second);
        }
        std::int64_t brute_hits = 0, brute_residue = -1;
        for (std::int64_t x = 0; x < span; ++x) {
            bool all = true;
            for (auto [a, d] : system)
                if (mod_floor(x - a, d) != 0) all = false;
            if (all) {
                ++brute_hits;
                brute_residue = x;
            }
        }
        auto outcome = crt_solve(system);
        if (outcome) {
            REQUIRE(brute_hits == 1);
            REQUIRE(outcome->modulus == span);
            REQUIRE(outcome->residue == brute_residue);
        } else {
            REQUIRE(brute_hits == 0);
        }
    }
}

TEST_CASE("count_solutions worked examples") {
    std::int64_t moduli_a[] = {5};
    CHECK(count_solutions(system_of({"x"}), moduli_a) == 1);
    std::int64_t moduli_b[] = {8};
    CHECK(count_solutions(system_of({"x^2-1"}), moduli_b) == 4);
    std::int64_t moduli_c[] = {2, 3};
    CHECK(count_solutions(system_of({"x-1", "x-2"}), moduli_c) == 1);
    for (std::int64_t n = 1; n <= 60; ++n) {
        std::int64_t m[] = {n};
        CHECK(count_solutions(system_of({"x"}), m) == 1);
    }
}

TEST_CASE("count_coprime_solutions worked examples") {
    for (std::int64_t n = 1; n <= 40; ++n) {
        std::int64_t m[] = {n};
        CHECK(count_coprime_solutions(system_of({"x"}), m) == (n == 1 ? 1 : 0));
    }
    std::int64_t moduli_b[] = {8};
    CHECK(count_coprime_solutions(system_of({"x^2-1"}), moduli_b) == 4);
    std::int64_t moduli_c[] = {2, 3};
    CHECK(count_coprime_solutions(system_of({"x-1", "x-2"}), moduli_c) == 1);
}

TEST_CASE("split counters agree with the single-pass oracle on random systems") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> r_dist(1, 3);
    std::uniform_int_distribution<int> deg_dist(0, 3);
    std::uniform_int_distribution<std::int64_t> coeff_dist(-6, 6);
    std::uniform_int_distribution<std::int64_t> mod_dist(1, 40);
    for (int trial = 0; trial < 400; ++trial) {
        int r = r_dist(rng);
        PolySystem system;
        std::vector<std::int64_t> moduli;
        for (int i = 0; i < r; ++i) {
            std::vector<std::int64_t> coeffs(static_cast<std::size_t>(deg_dist(rng)) + 1);
            for (auto& c : coeffs) c = coeff_dist(rng);
            system.polys.push_back(IntPoly(std::move(coeffs)));
            moduli.push_back(mod_dist(rng));
        }
        REQUIRE(count_solutions(system, moduli) == count_solutions_single_pass(system, moduli));
        REQUIRE(count_coprime_solutions(system, moduli) ==
                count_coprime_solutions_single_pass(system, moduli));
    }
}

TEST_CASE("count validation and budget") {
    std::int64_t moduli[] = {6};
    CHECK_THROWS_AS(count_solutions(PolySystem{}, moduli), std::invalid_argument);
    std::int64_t bad[] = {0};
    CHECK_THROWS_AS(count_solutions(system_of({"x"}), bad), std::invalid_argument);
    std::int64_t huge[] = {1'000'000'007};  // prime block larger than the budget
    CHECK_THROWS_AS(count_solutions(system_of({"x^2-1"}), huge), budget_error);
}

TEST_CASE("eta_linear worked examples") {
    std::int64_t a1[] = {1, 2}, d1[] = {2, 3};
    CHECK(eta_linear(a1, d1) == 1);
    std::int64_t a2[] = {0, 0}, d2[] = {1, 4};
    CHECK(eta_linear(a2, d2) == 0);
    std::int64_t a3[] = {1, 1}, d3[] = {2, 4};
    CHECK(eta_linear(a3, d3) == 1);
    std::int64_t a4[] = {0}, d4[] = {1};
    CHECK(eta_linear(a4, d4) == 1);
}

TEST_CASE("eta_linear equals the coprime solution count of the linear system") {
    for (int r = 1; r <= 2; ++r) {
        std::vector<std::int64_t> a(static_cast<std::size_t>(r)), d(static_cast<std::size_t>(r));
        std::function<void(int)> walk = [&](int pos) {
            if (pos == 2 * r) {
                PolySystem system;
                for (int i = 0; i < r; ++i)
                    system.polys.push_back(IntPoly({-a[static_cast<std::size_t>(i)], 1}));
                REQUIRE(eta_linear(a, d) == count_coprime_solutions(system, d));
                return;
            }
            if (pos < r) {
                for (std::int64_t v = -5; v <= 5; ++v) {
                    a[static_cast<std::size_t>(pos)] = v;
                    walk(pos + 1);
                }
            } else {
                for (std::int64_t v = 1; v <= 10; ++v) {
                    d[static_cast<std::size_t>(pos - r)] = v;
                    walk(pos + 1);
                }
            }
        };
        walk(0);
    }
}

TEST_CASE("eta_quadratic worked examples and brute force") {
    CHECK(eta_quadratic(1, 15) == 4);
    CHECK(eta_quadratic(7, 1) == 1);
    CHECK(eta_quadratic(2, 9) == 0);
    CHECK_THROWS_AS(eta_quadratic(1, 8), std::invalid_argument);
    CHECK_THROWS_AS(eta_quadratic(3, 9), std::invalid_argument);
    for (std::int64_t n = 1; n <= 99; n += 2)
        for (std::int64_t a = -6; a <= 6; ++a) {
            if (std::gcd(a, n) != 1) continue;
            std::vector<std::int64_t> coeffs = {-a, 0, 1};
            std::int64_t d[] = {n};
            CHECK(eta_quadratic(a, n) == count_coprime_solutions(PolySystem{{IntPoly(coeffs)}}, d));
        }
}

TEST_CASE("power root counts match brute force") {
    CHECK(count_power_roots_zero(1, 7, 3) == 1);
    CHECK(count_power_roots_zero(2, 2, 2) == 2);
    CHECK(count_power_roots_zero(3, 3, 2) == 3);
    for (int j = 1; j <= 5; ++j)
        for (std::int64_t p : {2, 3, 5})
            for (int a = 1; a <= 4; ++a) {
                std::vector<std::int64_t> coeffs(static_cast<std::size_t>(j) + 1, 0);
                coeffs.back() = 1;
                std::int64_t pa = 1;
                for (int i = 0; i < a; ++i) pa *= p;
                CHECK(count_power_roots_zero(j, p, a) == oracle::count_roots(IntPoly(coeffs), pa, false));
            }
}

TEST_CASE("square roots of unity match the cited table and brute force") {
    CHECK(count_square_roots_of_unity(2, 1) == 1);
    CHECK(count_square_roots_of_unity(2, 2) == 2);
    CHECK(count_square_roots_of_unity(7, 2) == 2);
    IntPoly g = IntPoly::parse("x^2-1");
    for (std::int64_t p : {2, 3, 5, 7})
        for (int a = 1; a <= 5; ++a) {
            std::int64_t pa = 1;
            for (int i = 0; i < a; ++i) pa *= p;
            CHECK(count_square_roots_of_unity(p, a) == oracle::count_roots(g, pa, false));
        }
}

TEST_CASE("jth roots of unity match brute force on the valid domain") {
    CHECK(count_jth_roots_of_unity(1, 11, 2) == 1);
    CHECK(count_jth_roots_of_unity(2, 7, 1) == 2);
    CHECK(count_jth_roots_of_unity(6, 7, 2) == 6);
    CHECK_THROWS_AS(count_jth_roots_of_unity(2, 2, 1), std::invalid_argument);
    for (int j = 1; j <= 6; ++j)
        for (std::int64_t p : {3, 5, 7})
            for (int a = 1; a <= 3; ++a) {
                if (j % p == 0 && a >= 2) {
                    CHECK_THROWS_AS(count_jth_roots_of_unity(j, p, a), std::invalid_argument);
                    continue;
                }
                std::vector<std::int64_t> coeffs(static_cast<std::size_t>(j) + 1, 0);
                coeffs[0] = -1;
                coeffs.back() = 1;
                std::int64_t pa = 1;
                for (int i = 0; i < a; ++i) pa *= p;
                CHECK(count_jth_roots_of_unity(j, p, a) == oracle::count_roots(IntPoly(coeffs), pa, false));
            }
}

TEST_CASE("unit class cardinality (divisor-restricted totient quotient)") {
    for (std::int64_t n = 1; n <= 120; ++n)
        for (std::int64_t d : divisors(n))
            for (std::int64_t x = 1; x <= d; ++x) {
                if (std::gcd(x, d) != 1) continue;
                std::int64_t count = 0;
                for (std::int64_t k = 1; k <= n; ++k)
                    if (k % d == x % d && std::gcd(k, n) == 1) ++count;
                REQUIRE(count == euler_phi(n) / euler_phi(d));
            }
}

TEST_SUITE_END();
