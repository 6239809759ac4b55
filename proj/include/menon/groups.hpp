#pragma once

#include <cstdint>
#include <vector>

namespace menon {

inline constexpr std::int64_t default_enumeration_budget = 100'000;

// Direct product C_{m_1} x ... x C_{m_r} of cyclic groups.
struct DirectProductSpec {
    std::vector<std::int64_t> orders;
};

// Divisor-grid count: sum over d_i | m_i of phi(d_1)...phi(d_r)/phi(lcm[d]).
// Every term is an integer; a non-exact division is an internal error.
std::int64_t cyclic_count_formula(const DirectProductSpec& spec);

// Cauchy-Frobenius count: (1/phi(q)) sum over units k mod q = m_1...m_r of
// prod_i gcd(k - 1, m_i). Non-exact division by phi(q) is a hard failure.
std::int64_t cyclic_count_burnside(const DirectProductSpec& spec);

// Enumeration oracle: materializes the cyclic subgroup generated by every
// element as a canonical element set and counts distinct sets.
std::int64_t cyclic_count_enumerate(const DirectProductSpec& spec);

// Closed form for C_{p^u} x C_{p^v} with u >= v >= 1:
// 2(1 + p + ... + p^(v-1)) + (u - v + 1) p^v.
std::int64_t cyclic_count_prime_power_pair(std::int64_t p, int u, int v);

}  // namespace menon
