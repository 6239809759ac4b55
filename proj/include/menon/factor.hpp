#pragma once

#include <cstdint>
#include <vector>

namespace menon {

struct PrimePower {
    std::int64_t prime = 0;
    int exponent = 0;
    bool operator==(const PrimePower&) const = default;
};

// Prime-power decomposition, primes strictly increasing, exponents >= 1.
// The empty list represents 1.
struct Factorization {
    std::vector<PrimePower> pairs;

    std::int64_t value() const;
    bool operator==(const Factorization&) const = default;
};

// Deterministic trial division; accepts 1 <= n < 2^63.
Factorization factorize(std::int64_t n);

bool is_prime(std::int64_t n);

// All divisors of n, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

}  // namespace menon
