#pragma once

#include "menon/funcspec.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace menon {

// Arithmetic function of r variables with exact rational values. The
// evaluator must be pure; it may be invoked from any number of threads.
struct MultiFunc {
    int arity = 1;
    std::function<Rational(std::span<const std::int64_t>)> eval;
};

// Componentwise product function m -> f_1(m_1) ... f_r(m_r).
MultiFunc product_func(std::vector<FuncSpec> funcs);

// Dirichlet convolution in r variables:
// (f*g)(m) = sum over componentwise divisor tuples d of f(d) g(m/d).
MultiFunc convolve(const MultiFunc& f, const MultiFunc& g);

struct MultCounterexample {
    std::vector<std::int64_t> m;
    std::vector<std::int64_t> n;
    Rational at_product;  // f(m1 n1, ..., mr nr)
    Rational split;       // f(m) f(n)
};

// Exhaustively tests f(mn) = f(m) f(n) over all pairs of r-tuples with
// components in [1, bound] and gcd(m1...mr, n1...nr) = 1. Empty result
// means the check passed.
std::vector<MultCounterexample> check_multiplicative(const MultiFunc& f, std::int64_t bound);

}  // namespace menon
