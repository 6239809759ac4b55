#include "menon/sums.hpp"

#include "menon/arith.hpp"
#include "menon/checked.hpp"
#include "menon/factor.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace menon {

namespace {

struct Shape {
    std::size_t r = 0;
    std::int64_t lcm = 1;
    std::int64_t big_modulus = 1;
};

Shape validate(const MenonInstance& instance, const char* context) {
    Shape shape;
    shape.r = instance.moduli.size();
    if (shape.r == 0) throw std::invalid_argument(std::string(context) + ": empty instance");
    if (instance.funcs.size() != shape.r || instance.polys.polys.size() != shape.r)
        throw std::invalid_argument(std::string(context) + ": funcs, polys and moduli must have equal length");
    for (std::int64_t m : instance.moduli) {
        if (m < 1)
            throw std::invalid_argument(std::string(context) + ": moduli must be >= 1, got " + std::to_string(m));
        shape.lcm = lcm_i64(shape.lcm, m);
    }
    shape.big_modulus = instance.big_modulus == 0 ? shape.lcm : instance.big_modulus;
    if (shape.big_modulus < 1 || shape.big_modulus % shape.lcm != 0)
        throw std::invalid_argument(std::string(context) + ": big modulus " +
                                    std::to_string(instance.big_modulus) + " is not a multiple of lcm[m] = " +
                                    std::to_string(shape.lcm));
    return shape;
}

// prod_i f_i(gcd(g_i(k), m_i)) for one k.
Rational term_at(const MenonInstance& instance, std::int64_t k) {
    Rational term(1);
    for (std::size_t i = 0; i < instance.moduli.size(); ++i) {
        std::int64_t m = instance.moduli[i];
        std::int64_t residue = instance.polys.polys[i].eval_mod(k, m);
        term *= instance.funcs[i](std::gcd(residue, m));
    }
    return term;
}

// Walks the divisor grid d_i | m_i with per-position mu*f weights already
// attached; skips tuples whose weight product vanishes.
template <typename Visit>
void for_each_weighted_tuple(const MenonInstance& instance, Visit&& visit) {
    const std::size_t r = instance.moduli.size();
    std::vector<std::vector<std::int64_t>> divisor_lists(r);
    std::vector<std::vector<Rational>> weights(r);
    for (std::size_t i = 0; i < r; ++i) {
        divisor_lists[i] = divisors(instance.moduli[i]);
        weights[i].reserve(divisor_lists[i].size());
        for (std::int64_t d : divisor_lists[i]) weights[i].push_back(mu_star(instance.funcs[i], d));
    }

    std::vector<std::size_t> pick(r, 0);
    std::vector<std::int64_t> tuple(r);
    for (;;) {
        Rational weight(1);
        for (std::size_t i = 0; i < r; ++i) {
            tuple[i] = divisor_lists[i][pick[i]];
            weight *= weights[i][pick[i]];
        }
        if (!weight.is_zero()) visit(std::span<const std::int64_t>(tuple), weight);
        std::size_t i = 0;
        while (i < r) {
            if (++pick[i] < divisor_lists[i].size()) break;
            pick[i] = 0;
            ++i;
        }
        if (i == r) break;
    }
}

}  // namespace

std::int64_t instance_lcm(const MenonInstance& instance) {
    return validate(instance, "instance_lcm").lcm;
}

Rational sum_S_direct(const MenonInstance& instance) {
    Shape shape = validate(instance, "sum_S_direct");
    check_budget(shape.big_modulus, budget_limit(default_direct_sum_budget), "sum_S_direct");
    Rational acc;
    for (std::int64_t k = 1; k <= shape.big_modulus; ++k) acc += term_at(instance, k);
    return acc / Rational(shape.big_modulus);
}

Rational sum_S_formula(const MenonInstance& instance) {
    validate(instance, "sum_S_formula");
    Rational acc;
    for_each_weighted_tuple(instance, [&](std::span<const std::int64_t> d, const Rational& weight) {
        std::int64_t grid_lcm = 1;
        for (std::int64_t v : d) grid_lcm = lcm_i64(grid_lcm, v);
        std::int64_t solutions = count_solutions(instance.polys, d);
        if (solutions != 0) acc += weight * Rational(solutions, grid_lcm);
    });
    return acc;
}

Rational sum_R_direct(const MenonInstance& instance) {
    Shape shape = validate(instance, "sum_R_direct");
    check_budget(shape.big_modulus, budget_limit(default_direct_sum_budget), "sum_R_direct");
    Rational acc;
    for (std::int64_t k = 1; k <= shape.big_modulus; ++k) {
        if (std::gcd(k, shape.big_modulus) != 1) continue;
        acc += term_at(instance, k);
    }
    return acc / Rational(euler_phi(shape.big_modulus));
}

Rational sum_R_formula(const MenonInstance& instance) {
    validate(instance, "sum_R_formula");
    Rational acc;
    for_each_weighted_tuple(instance, [&](std::span<const std::int64_t> d, const Rational& weight) {
        std::int64_t grid_lcm = 1;
        for (std::int64_t v : d) grid_lcm = lcm_i64(grid_lcm, v);
        std::int64_t solutions = count_coprime_solutions(instance.polys, d);
        if (solutions != 0) acc += weight * Rational(solutions, euler_phi(grid_lcm));
    });
    return acc;
}

}  // namespace menon
