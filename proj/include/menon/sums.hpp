#pragma once

#include "menon/congruence.hpp"
#include "menon/funcspec.hpp"
#include "menon/poly.hpp"

#include <cstdint>
#include <vector>

namespace menon {

inline constexpr std::int64_t default_direct_sum_budget = 10'000'000;

// One instance of the gcd sums: function system F, polynomial system G,
// moduli m and outer modulus M with lcm[m] | M. big_modulus = 0 means
// "use lcm[m]".
struct MenonInstance {
    std::vector<FuncSpec> funcs;
    PolySystem polys;
    std::vector<std::int64_t> moduli;
    std::int64_t big_modulus = 0;
};

// lcm of the instance moduli; also validates the instance shape.
std::int64_t instance_lcm(const MenonInstance& instance);

// (1/M) sum over k in [1, M] of prod_i f_i(gcd(g_i(k), m_i)).
Rational sum_S_direct(const MenonInstance& instance);

// Divisor-grid form: sum over d_i | m_i of
// (mu*f_1)(d_1)...(mu*f_r)(d_r) / lcm[d] * N_G(d); independent of M.
Rational sum_S_formula(const MenonInstance& instance);

// (1/phi(M)) sum over k in [1, M] coprime to M of the same product.
Rational sum_R_direct(const MenonInstance& instance);

// Divisor-grid form with phi(lcm[d]) and the coprime count eta_G(d).
Rational sum_R_formula(const MenonInstance& instance);

}  // namespace menon
