#pragma once

#include "menon/factor.hpp"
#include "menon/rational.hpp"

#include <cstdint>

namespace menon {

// value mod modulus, normalized into [0, modulus).
std::int64_t mod_floor(std::int64_t value, std::int64_t modulus);

// base^exponent mod modulus, exponent >= 0, modulus >= 1.
std::int64_t pow_mod(std::int64_t base, std::int64_t exponent, std::int64_t modulus);

// lcm with an overflow check; both arguments positive.
std::int64_t lcm_i64(std::int64_t a, std::int64_t b);

std::int64_t euler_phi(std::int64_t n);

// Jordan totient of order t: n^t * prod_{p|n} (1 - p^-t), exact. For t = 0
// this degenerates to 1 at n = 1 and 0 elsewhere, matching mu * id_0.
Rational jordan_phi(int t, std::int64_t n);

int mobius(std::int64_t n);

std::int64_t tau(std::int64_t n);

// Sum of k-th powers of the divisors of n.
int128 sigma(int k, std::int64_t n);

// Number of divisors of n coprime to a; gcd with 0 is the other argument.
std::int64_t tau_coprime(std::int64_t n, std::int64_t a);

// Quadratic-residue indicator of a modulo an odd prime p; rejects other p.
int legendre_symbol(std::int64_t a, std::int64_t p);

// Number of distinct prime factors.
int omega(std::int64_t n);

}  // namespace menon
