#pragma once

#include "menon/poly.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

namespace menon {

inline constexpr std::int64_t default_residue_budget = 10'000'000;

struct CrtSolution {
    std::int64_t residue = 0;  // in [0, modulus)
    std::int64_t modulus = 1;  // lcm of the input moduli
    bool operator==(const CrtSolution&) const = default;
};

// Simultaneous congruences x = a_i (mod d_i). Empty optional when some pair
// violates gcd(d_i, d_j) | a_i - a_j; otherwise the unique residue mod lcm.
std::optional<CrtSolution> crt_solve(std::span<const std::pair<std::int64_t, std::int64_t>> congruences);

// Number of x (mod lcm[d]) with g_i(x) = 0 (mod d_i) for every i. Splits the
// moduli into prime-power blocks, brute-forces each block, and multiplies.
std::int64_t count_solutions(const PolySystem& system, std::span<const std::int64_t> moduli);

// Same count restricted to x coprime to every d_i.
std::int64_t count_coprime_solutions(const PolySystem& system, std::span<const std::int64_t> moduli);

// Single-pass counterparts that walk x over [0, lcm[d]) with no
// multiplicative splitting; these are the independent oracles for the
// split counters above and stay deliberately naive.
std::int64_t count_solutions_single_pass(const PolySystem& system, std::span<const std::int64_t> moduli);
std::int64_t count_coprime_solutions_single_pass(const PolySystem& system,
                                                 std::span<const std::int64_t> moduli);

// Closed form for the linear system (x - a_1, ..., x - a_r): 1 when every
// gcd(d_i, a_i) = 1 and gcd(d_i, d_j) | a_i - a_j, else 0.
int eta_linear(std::span<const std::int64_t> shifts, std::span<const std::int64_t> moduli);

// Coprime solution count of x^2 = a (mod n) for odd n with gcd(a, n) = 1:
// prod over p | n of (1 + legendre(a, p)).
std::int64_t eta_quadratic(std::int64_t a, std::int64_t n);

// Solutions of x^j = 0 (mod p^a): p^floor((j-1)a/j).
std::int64_t count_power_roots_zero(int j, std::int64_t p, int a);

// Solutions of x^2 = 1 (mod p^a): 2 for odd p; 1, 2, 4 for p = 2 with
// a = 1, a = 2, a >= 3.
std::int64_t count_square_roots_of_unity(std::int64_t p, int a);

// Solutions of x^j = 1 (mod p^a) for odd p not dividing j: gcd(j, p - 1).
std::int64_t count_jth_roots_of_unity(int j, std::int64_t p, int a);

}  // namespace menon
