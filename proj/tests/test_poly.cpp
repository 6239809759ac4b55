#include "menon/poly.hpp"

#include "menon/checked.hpp"

#include <doctest.h>

#include <random>

using namespace menon;

namespace {

std::vector<std::int64_t> coeffs(const IntPoly& p) {
    return {p.coefficients().begin(), p.coefficients().end()};
}

}  // namespace

TEST_SUITE_BEGIN("poly");

TEST_CASE("parse worked examples") {
    CHECK(coeffs(IntPoly::parse("x-1")) == std::vector<std::int64_t>{-1, 1});
    CHECK(coeffs(IntPoly::parse("x^2-1")) == std::vector<std::int64_t>{-1, 0, 1});
    CHECK(coeffs(IntPoly::parse("x^6-1")) == std::vector<std::int64_t>{-1, 0, 0, 0, 0, 0, 1});
    CHECK(coeffs(IntPoly::parse("3*x-5")) == std::vector<std::int64_t>{-5, 3});
    CHECK(coeffs(IntPoly::parse("x")) == std::vector<std::int64_t>{0, 1});
    CHECK(coeffs(IntPoly::parse("-x+2")) == std::vector<std::int64_t>{2, -1});
    CHECK(coeffs(IntPoly::parse("7")) == std::vector<std::int64_t>{7});
    CHECK(IntPoly::parse("0").is_zero());
    CHECK(IntPoly::parse("x-x").is_zero());
    CHECK(coeffs(IntPoly::parse("x*x")) == std::vector<std::int64_t>{0, 0, 1});
    CHECK(coeffs(IntPoly::parse("2*x*x+x^2")) == std::vector<std::int64_t>{0, 0, 3});
    CHECK(coeffs(IntPoly::parse("x^0")) == std::vector<std::int64_t>{1});
}

TEST_CASE("parse is whitespace insensitive") {
    CHECK(IntPoly::parse(" x ^ 2 - 1 ") == IntPoly::parse("x^2-1"));
    CHECK(IntPoly::parse("3 * x - 5") == IntPoly::parse("3*x-5"));
}

TEST_CASE("parse rejects bad input with a position") {
    auto position_of = [](const char* text) {
        try {
            IntPoly::parse(text);
        } catch (const parse_error& e) {
            return static_cast<long>(e.position());
        }
        return -1L;
    };
    CHECK(position_of("x^") >= 0);
    CHECK(position_of("x+") >= 0);
    CHECK(position_of("^2") == 0);
    CHECK(position_of("x^-1") == 2);
    CHECK(position_of("y") == 0);
    CHECK(position_of("2x") == 1);
    CHECK(position_of("x^17") >= 2);
    CHECK(position_of("x^2 x") >= 0);
    CHECK(position_of("4294967297") >= 0);  // coefficient above 2^31
    CHECK(position_of("") == 0);
}

TEST_CASE("degree and coefficient caps") {
    CHECK_NOTHROW(IntPoly::parse("x^16"));
    CHECK_THROWS_AS(IntPoly::parse("x^8*x^9"), parse_error);
    CHECK_THROWS_AS(IntPoly(std::vector<std::int64_t>(18, 1)), std::invalid_argument);
    CHECK_NOTHROW(IntPoly::parse("2147483648"));  // exactly 2^31 is allowed
    CHECK_THROWS_AS(IntPoly::parse("2147483648*2"), parse_error);
}

TEST_CASE("canonical printing uses descending powers and reparses") {
    CHECK(IntPoly::parse("x^2-1").to_string() == "x^2-1");
    CHECK(IntPoly::parse("-1+x^2").to_string() == "x^2-1");
    CHECK(IntPoly::parse("3*x-5").to_string() == "3*x-5");
    CHECK(IntPoly::parse("0").to_string() == "0");
    CHECK(IntPoly::parse("-x").to_string() == "-x");
    CHECK(IntPoly::parse("x+x").to_string() == "2*x");
}

TEST_CASE("print then parse is the identity on random polynomials") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> degree_dist(0, 9);
    std::uniform_int_distribution<std::int64_t> coeff_dist(-50, 50);
    for (int trial = 0; trial < 3000; ++trial) {
        std::vector<std::int64_t> raw(static_cast<std::size_t>(degree_dist(rng)) + 1);
        for (auto& c : raw) c = coeff_dist(rng);
        IntPoly p(std::move(raw));
        IntPoly reparsed = IntPoly::parse(p.to_string());
        REQUIRE(reparsed == p);
        REQUIRE(reparsed.to_string() == p.to_string());
    }
}

TEST_CASE("eval_mod matches exact evaluation") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> degree_dist(0, 6);
    std::uniform_int_distribution<std::int64_t> coeff_dist(-100, 100);
    std::uniform_int_distribution<std::int64_t> x_dist(-500, 500);
    std::uniform_int_distribution<std::int64_t> mod_dist(1, 997);
    for (int trial = 0; trial < 3000; ++trial) {
        std::vector<std::int64_t> raw(static_cast<std::size_t>(degree_dist(rng)) + 1);
        for (auto& c : raw) c = coeff_dist(rng);
        IntPoly p(raw);
        std::int64_t x = x_dist(rng);
        std::int64_t m = mod_dist(rng);
        int128 exact = 0;
        int128 power = 1;
        for (std::int64_t c : raw) {
            exact += power * c;
            power *= x;
        }
        int128 expected = exact % m;
        if (expected < 0) expected += m;
        REQUIRE(int128(p.eval_mod(x, m)) == expected);
    }
    CHECK(IntPoly::parse("x^2-1").eval_mod(3, 8) == 0);
    CHECK(IntPoly::parse("x-1").eval_mod(1, 7) == 0);
    CHECK_THROWS_AS(IntPoly::parse("x").eval_mod(1, 0), std::invalid_argument);
}

TEST_CASE("poly list parsing") {
    auto list = parse_poly_list("x-1,x^2-1");
    REQUIRE(list.size() == 2);
    CHECK(list[0] == IntPoly::parse("x-1"));
    CHECK(list[1] == IntPoly::parse("x^2-1"));
    CHECK_THROWS_AS(parse_poly_list("x-1,"), parse_error);
}

TEST_SUITE_END();
