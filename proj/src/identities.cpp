#include "menon/identities.hpp"

#include "menon/arith.hpp"
#include "menon/checked.hpp"
#include "menon/congruence.hpp"
#include "menon/factor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace menon {

namespace {

using Echo = std::vector<std::pair<std::string, std::string>>;

[[noreturn]] void reject(const std::string& name, const std::string& why) {
    throw std::invalid_argument(name + ": " + why);
}

std::string join(std::span<const std::int64_t> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

std::string join_int(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

struct Args {
    const std::string& name;
    const IdentityParams& params;
    Echo echo;

    std::int64_t need_n() {
        if (!params.n || *params.n < 1) reject(name, "requires a positive modulus n");
        echo.emplace_back("n", std::to_string(*params.n));
        return *params.n;
    }

    std::vector<std::int64_t> need_moduli(std::size_t count) {
        if (params.moduli.size() != count)
            reject(name, "requires exactly " + std::to_string(count) + " moduli m");
        for (std::int64_t m : params.moduli)
            if (m < 1) reject(name, "moduli must be positive");
        echo.emplace_back("m", join(params.moduli));
        return params.moduli;
    }

    std::vector<std::int64_t> need_moduli_any() {
        if (params.moduli.empty()) reject(name, "requires a nonempty moduli list m");
        for (std::int64_t m : params.moduli)
            if (m < 1) reject(name, "moduli must be positive");
        echo.emplace_back("m", join(params.moduli));
        return params.moduli;
    }

    std::vector<std::int64_t> need_shifts(std::size_t count) {
        if (params.shifts.size() != count)
            reject(name, "requires exactly " + std::to_string(count) + " offsets a");
        echo.emplace_back("a", join(params.shifts));
        return params.shifts;
    }

    int need_power() {
        if (!params.power || *params.power < 1) reject(name, "requires a positive power j");
        if (*params.power > 64) reject(name, "power j is capped at 64");
        echo.emplace_back("j", std::to_string(*params.power));
        return *params.power;
    }

    int need_index_count(int cap) {
        if (!params.index_count || *params.index_count < 1) reject(name, "requires a positive index count r");
        if (*params.index_count > cap)
            reject(name, "index count is capped at " + std::to_string(cap));
        echo.emplace_back("r", std::to_string(*params.index_count));
        return *params.index_count;
    }

    // M with lcm | M; defaults to lcm itself.
    std::int64_t resolve_M(std::int64_t lcm) {
        std::int64_t M = params.big_modulus.value_or(lcm);
        if (M < 1 || M % lcm != 0)
            reject(name, "M = " + std::to_string(M) + " must be a positive multiple of " + std::to_string(lcm));
        echo.emplace_back("M", std::to_string(M));
        return M;
    }

    void forbid_M() {
        if (params.big_modulus) reject(name, "does not take an M parameter");
    }
};

// sum over k in [1, M] with gcd(k, M) = 1 of term(k), exact in 128 bits.
template <typename Term>
int128 sum_over_units(std::int64_t M, const char* context, Term&& term) {
    check_budget(M, budget_limit(default_direct_sum_budget), context);
    int128 acc = 0;
    for (std::int64_t k = 1; k <= M; ++k) {
        if (std::gcd(k, M) != 1) continue;
        acc = checked_add(acc, term(k), context);
    }
    return acc;
}

std::int64_t gcd_fold(std::int64_t seed, std::span<const std::int64_t> values) {
    std::int64_t g = seed;
    for (std::int64_t v : values) g = std::gcd(g, v);
    return g;
}

// Walks tuples in [1, n]^width.
template <typename Visit>
void for_each_index_tuple(std::int64_t n, int width, Visit&& visit) {
    std::vector<std::int64_t> k(static_cast<std::size_t>(width), 1);
    for (;;) {
        visit(std::span<const std::int64_t>(k));
        std::size_t i = 0;
        while (i < k.size()) {
            if (k[i] < n) {
                ++k[i];
                break;
            }
            k[i] = 1;
            ++i;
        }
        if (i == k.size()) return;
    }
}

// Walks divisor pairs (d1 | m1, d2 | m2).
template <typename Visit>
void for_each_divisor_pair(std::int64_t m1, std::int64_t m2, Visit&& visit) {
    for (std::int64_t d1 : divisors(m1))
        for (std::int64_t d2 : divisors(m2)) visit(d1, d2);
}

// ---------------------------------------------------------------- catalog --

IdentityReport build(Args& args, Rational lhs, Rational rhs) {
    std::sort(args.echo.begin(), args.echo.end());
    return IdentityReport{args.name, std::move(args.echo), lhs, rhs, lhs == rhs};
}

IdentityReport menon_classic(Args& args) {
    std::int64_t n = args.need_n();
    int128 lhs = sum_over_units(n, "menon_classic", [&](std::int64_t k) -> int128 {
        return std::gcd(mod_floor(k - 1, n), n);
    });
    int128 rhs = checked_mul(euler_phi(n), tau(n), "menon_classic");
    return build(args, Rational(lhs), Rational(rhs));
}

IdentityReport sita_ramaiah(Args& args) {
    std::int64_t n = args.need_n();
    if (!args.params.func) reject(args.name, "requires a function f");
    const FuncSpec& f = *args.params.func;
    args.echo.emplace_back("f", f.to_string());
    check_budget(n, budget_limit(default_direct_sum_budget), "sita_ramaiah");
    Rational lhs;
    for (std::int64_t k = 1; k <= n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        lhs += f(std::gcd(mod_floor(k - 1, n), n));
    }
    Rational grid;
    for (std::int64_t d : divisors(n)) grid += mu_star(f, d) / Rational(euler_phi(d));
    return build(args, lhs, Rational(euler_phi(n)) * grid);
}

IdentityReport nageswara_rao(Args& args) {
    std::int64_t n = args.need_n();
    int s = args.need_index_count(6);
    std::vector<std::int64_t> shifts = args.need_shifts(static_cast<std::size_t>(s));
    if (gcd_fold(n, shifts) != 1) reject(args.name, "requires gcd(a_1, ..., a_s, n) = 1");
    int128 tuple_count = checked_pow(n, s, "nageswara_rao");
    check_budget(narrow_i64(tuple_count, "nageswara_rao"), budget_limit(default_direct_sum_budget),
                 "nageswara_rao");
    int128 lhs = 0;
    for_each_index_tuple(n, s, [&](std::span<const std::int64_t> k) {
        if (gcd_fold(n, k) != 1) return;
        std::int64_t g = n;
        for (int i = 0; i < s; ++i) g = std::gcd(g, k[static_cast<std::size_t>(i)] - shifts[static_cast<std::size_t>(i)]);
        lhs = checked_add(lhs, checked_pow(g, s, "nageswara_rao"), "nageswara_rao");
    });
    Rational rhs = jordan_phi(s, n) * Rational(tau(n));
    return build(args, Rational(lhs), rhs);
}

IdentityReport richards(Args& args) {
    std::int64_t n = args.need_n();
    if (!args.params.poly) reject(args.name, "requires a polynomial g");
    const IntPoly& g = *args.params.poly;
    args.echo.emplace_back("g", g.to_string());
    PolySystem system{{g}};
    int128 lhs = sum_over_units(n, "richards", [&](std::int64_t k) -> int128 {
        return std::gcd(g.eval_mod(k, n), n);
    });
    int128 grid = 0;
    for (std::int64_t d : divisors(n)) {
        std::int64_t dd[] = {d};
        grid = checked_add(grid, count_coprime_solutions(system, dd), "richards");
    }
    return build(args, Rational(lhs), Rational(checked_mul(euler_phi(n), grid, "richards")));
}

IdentityReport sury(Args& args) {
    std::int64_t n = args.need_n();
    int r = args.need_index_count(6);
    check_budget(narrow_i64(checked_pow(n, r, "sury"), "sury"), budget_limit(default_direct_sum_budget),
                 "sury");
    int128 lhs = 0;
    for_each_index_tuple(n, r, [&](std::span<const std::int64_t> k) {
        if (std::gcd(k[0], n) != 1) return;
        std::int64_t g = std::gcd(n, k[0] - 1);
        for (std::size_t i = 1; i < k.size(); ++i) g = std::gcd(g, k[i]);
        lhs = checked_add(lhs, g, "sury");
    });
    int128 rhs = checked_mul(euler_phi(n), sigma(r - 1, n), "sury");
    return build(args, Rational(lhs), Rational(rhs));
}

// Shared direct side of the linear-shift family:
// sum over units k mod M of prod_i gcd(k - a_i, m_i)^{t_i}.
int128 shifted_gcd_sum(std::int64_t M, std::span<const std::int64_t> moduli,
                       std::span<const std::int64_t> shifts, std::span<const int> exponents,
                       const char* context) {
    return sum_over_units(M, context, [&](std::int64_t k) {
        int128 term = 1;
        for (std::size_t i = 0; i < moduli.size(); ++i) {
            std::int64_t g = std::gcd(mod_floor(k - shifts[i], moduli[i]), moduli[i]);
            term = checked_mul(term, exponents.empty() ? int128(g) : checked_pow(g, exponents[i], context),
                               context);
        }
        return term;
    });
}

IdentityReport general_menon(Args& args) {
    std::vector<std::int64_t> moduli = args.need_moduli_any();
    std::vector<std::int64_t> shifts = args.need_shifts(moduli.size());
    std::int64_t lcm = 1;
    for (std::int64_t m : moduli) lcm = lcm_i64(lcm, m);
    std::int64_t M = args.resolve_M(lcm);

    int128 raw = shifted_gcd_sum(M, moduli, shifts, {}, "general_menon");
    Rational lhs = Rational(raw) / Rational(euler_phi(M));

    Rational rhs;
    std::vector<std::vector<std::int64_t>> lists;
    for (std::int64_t m : moduli) lists.push_back(divisors(m));
    std::vector<std::size_t> pick(moduli.size(), 0);
    std::vector<std::int64_t> d(moduli.size());
    for (;;) {
        std::int64_t grid_lcm = 1;
        int128 phis = 1;
        for (std::size_t i = 0; i < d.size(); ++i) {
            d[i] = lists[i][pick[i]];
            grid_lcm = lcm_i64(grid_lcm, d[i]);
            phis = checked_mul(phis, euler_phi(d[i]), "general_menon");
        }
        if (eta_linear(shifts, d) == 1)
            rhs += Rational(phis) / Rational(euler_phi(grid_lcm));
        std::size_t i = 0;
        while (i < pick.size()) {
            if (++pick[i] < lists[i].size()) break;
            pick[i] = 0;
            ++i;
        }
        if (i == pick.size()) break;
    }
    return build(args, lhs, rhs);
}

IdentityReport general_menon_t(Args& args) {
    std::vector<std::int64_t> moduli = args.need_moduli_any();
    std::vector<std::int64_t> shifts = args.need_shifts(moduli.size());
    if (args.params.exponents.size() != moduli.size())
        reject(args.name, "requires one exponent t per modulus");
    for (int t : args.params.exponents)
        if (t < 0 || t > 16) reject(args.name, "exponents t must lie in [0, 16]");
    const std::vector<int>& exps = args.params.exponents;
    args.echo.emplace_back("t", join_int(exps));
    std::int64_t lcm = 1;
    for (std::int64_t m : moduli) lcm = lcm_i64(lcm, m);
    std::int64_t M = args.resolve_M(lcm);

    int128 raw = shifted_gcd_sum(M, moduli, shifts, exps, "general_menon_t");
    Rational lhs = Rational(raw) / Rational(euler_phi(M));

    Rational rhs;
    std::vector<std::vector<std::int64_t>> lists;
    for (std::int64_t m : moduli) lists.push_back(divisors(m));
    std::vector<std::size_t> pick(moduli.size(), 0);
    std::vector<std::int64_t> d(moduli.size());
    for (;;) {
        std::int64_t grid_lcm = 1;
        Rational weight(1);
        for (std::size_t i = 0; i < d.size(); ++i) {
            d[i] = lists[i][pick[i]];
            grid_lcm = lcm_i64(grid_lcm, d[i]);
            weight *= jordan_phi(exps[i], d[i]);
        }
        if (!weight.is_zero() && eta_linear(shifts, d) == 1)
            rhs += weight / Rational(euler_phi(grid_lcm));
        std::size_t i = 0;
        while (i < pick.size()) {
            if (++pick[i] < lists[i].size()) break;
            pick[i] = 0;
            ++i;
        }
        if (i == pick.size()) break;
    }
    return build(args, lhs, rhs);
}

IdentityReport r2_same_shift(Args& args) {
    std::vector<std::int64_t> moduli = args.need_moduli(2);
    std::vector<std::int64_t> shifts = args.need_shifts(1);
    std::int64_t lcm = lcm_i64(moduli[0], moduli[1]);
    std::int64_t a = shifts[0];
    if (std::gcd(a, lcm) != 1) reject(args.name, "requires gcd(a, lcm[m1, m2]) = 1");
    std::int64_t M = args.resolve_M(lcm);

    std::int64_t both[] = {a, a};
    int128 lhs = shifted_gcd_sum(M, moduli, both, {}, "r2_same_shift");
    int128 grid = 0;
    for_each_divisor_pair(moduli[0], moduli[1], [&](std::int64_t d1, std::int64_t d2) {
        grid = checked_add(grid, euler_phi(std::gcd(d1, d2)), "r2_same_shift");
    });
    int128 rhs = checked_mul(euler_phi(M), grid, "r2_same_shift");
    return build(args, Rational(lhs), Rational(rhs));
}

IdentityReport pairwise_coprime(Args& args) {
    std::vector<std::int64_t> moduli = args.need_moduli_any();
    std::vector<std::int64_t> shifts = args.need_shifts(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i)
        for (std::size_t j = i + 1; j < moduli.size(); ++j)
            if (std::gcd(moduli[i], moduli[j]) != 1)
                reject(args.name, "moduli must be pairwise coprime");
    int128 product = 1;
    for (std::int64_t m : moduli) product = checked_mul(product, m, "pairwise_coprime");
    std::int64_t m = narrow_i64(product, "pairwise_coprime");
    args.forbid_M();

    int128 lhs = shifted_gcd_sum(m, moduli, shifts, {}, "pairwise_coprime");
    int128 rhs = euler_phi(m);
    for (std::size_t i = 0; i < moduli.size(); ++i)
        rhs = checked_mul(rhs, tau_coprime(moduli[i], shifts[i]), "pairwise_coprime");
    return build(args, Rational(lhs), Rational(rhs));
}

IdentityReport r2_offsets(Args& args) {
    std::vector<std::int64_t> moduli = args.need_moduli(2);
    std::vector<std::int64_t> shifts = args.need_shifts(2);
    std::int64_t M = args.resolve_M(lcm_i64(moduli[0], moduli[1]));

    int128 raw = shifted_gcd_sum(M, moduli, shifts, {}, "r2_offsets");
    Rational lhs = Rational(raw) / Rational(euler_phi(M));

    int128 grid = 0;
    for_each_divisor_pair(moduli[0], moduli[1], [&](std::int64_t d1, std::int64_t d2) {
        if (std::gcd(d1, shifts[0]) != 1 || std::gcd(d2, shifts[1]) != 1) return;
        if ((shifts[0] - shifts[1]) % std::gcd(d1, d2) != 0) return;
        grid = checked_add(grid, euler_phi(std::gcd(d1, d2)), "r2_offsets");
    });
    return build(args, lhs, Rational(grid));
}

IdentityReport r2_adjacent(Args& args) {
    std::vector<std::int64_t> moduli = args.need_moduli(2);
    std::vector<std::int64_t> shifts = args.need_shifts(2);
    std::int64_t gap = shifts[0] - shifts[1];
    if (gap != 1 && gap != -1) reject(args.name, "requires |a1 - a2| = 1");
    std::int64_t M = args.resolve_M(lcm_i64(moduli[0], moduli[1]));

    int128 raw = shifted_gcd_sum(M, moduli, shifts, {}, "r2_adjacent");
    Rational lhs = Rational(raw) / Rational(euler_phi(M));

    int128 grid = 0;
    for_each_divisor_pair(moduli[0], moduli[1], [&](std::int64_t d1, std::int64_t d2) {
        if (std::gcd(d1, shifts[0]) != 1 || std::gcd(d2, shifts[1]) != 1) return;
        if (std::gcd(d1, d2) != 1) return;
        grid = checked_add(grid, 1, "r2_adjacent");
    });
    return build(args, lhs, Rational(grid));
}

IdentityReport quadratic_legendre(Args& args) {
    std::vector<std::int64_t> moduli = args.need_moduli(2);
    std::vector<std::int64_t> shifts = args.need_shifts(1);
    std::int64_t a = shifts[0];
    std::int64_t m = lcm_i64(moduli[0], moduli[1]);
    if (m % 2 == 0) reject(args.name, "requires odd lcm[m1, m2]");
    if (std::gcd(a, m) != 1) reject(args.name, "requires gcd(a, lcm[m1, m2]) = 1");
    args.forbid_M();

    int128 lhs = sum_over_units(m, "quadratic_legendre", [&](std::int64_t k) {
        int128 term = 1;
        for (std::int64_t mi : moduli) {
            std::int64_t value = mod_floor(k % mi * (k % mi) - a, mi);
            term = checked_mul(term, std::gcd(value, mi), "quadratic_legendre");
        }
        return term;
    });

    int128 grid = 0;
    for_each_divisor_pair(moduli[0], moduli[1], [&](std::int64_t d1, std::int64_t d2) {
        std::int64_t pair_lcm = lcm_i64(d1, d2);
        // For a = 1 the Legendre factors collapse to 2^omega(lcm).
        std::int64_t roots = a == 1 ? narrow_i64(checked_pow(2, omega(pair_lcm), "quadratic_legendre"),
                                                 "quadratic_legendre")
                                    : eta_quadratic(a, pair_lcm);
        grid = checked_add(grid, checked_mul(euler_phi(std::gcd(d1, d2)), roots, "quadratic_legendre"),
                           "quadratic_legendre");
    });
    int128 rhs = checked_mul(euler_phi(m), grid, "quadratic_legendre");
    return build(args, Rational(lhs), Rational(rhs));
}

IdentityReport linear_bk_minus_a(Args& args) {
    std::int64_t n = args.need_n();
    std::vector<std::int64_t> shifts = args.need_shifts(1);
    if (!args.params.linear_scale) reject(args.name, "requires the linear coefficient b");
    std::int64_t a = shifts[0];
    std::int64_t b = *args.params.linear_scale;
    args.echo.emplace_back("b", std::to_string(b));
    if (std::gcd(b, n) != 1) reject(args.name, "requires gcd(b, n) = 1");

    int128 lhs = sum_over_units(n, "linear_bk_minus_a", [&](std::int64_t k) -> int128 {
        return std::gcd(mod_floor(b % n * k - a, n), n);
    });
    int128 rhs = checked_mul(euler_phi(n), tau_coprime(n, a), "linear_bk_minus_a");
    return build(args, Rational(lhs), Rational(rhs));
}

IdentityReport square_minus_one(Args& args) {
    std::int64_t n = args.need_n();
    int128 lhs = sum_over_units(n, "square_minus_one", [&](std::int64_t k) -> int128 {
        return std::gcd(mod_floor(k % n * (k % n) - 1, n), n);
    });
    int ell = 0;
    std::int64_t odd = n;
    while (odd % 2 == 0) {
        odd /= 2;
        ++ell;
    }
    int128 tau_sq = tau(narrow_i64(checked_mul(odd, odd, "square_minus_one"), "square_minus_one"));
    int128 h = ell == 0 ? tau_sq : ell == 1 ? 2 * tau_sq : 4 * (ell - 1) * tau_sq;
    int128 rhs = checked_mul(euler_phi(n), h, "square_minus_one");
    return build(args, Rational(lhs), Rational(rhs));
}

void require_power_domain(const std::string& name, std::int64_t n, int j) {
    if (n % 2 == 0) reject(name, "requires odd n");
    for (const auto& pp : factorize(n).pairs)
        if (j % pp.prime == 0 && pp.exponent >= 2)
            reject(name, "prime " + std::to_string(pp.prime) + " divides j with " +
                             std::to_string(pp.prime) + "^2 | n; the divisor closed form only covers " +
                             "moduli where shared primes appear to the first power");
}

int128 power_shift_sum(std::int64_t n, int j, const char* context) {
    return sum_over_units(n, context, [&](std::int64_t k) -> int128 {
        return std::gcd(mod_floor(pow_mod(k, j, n) - 1, n), n);
    });
}

IdentityReport power_j(Args& args) {
    std::int64_t n = args.need_n();
    int j = args.need_power();
    require_power_domain(args.name, n, j);
    int128 lhs = power_shift_sum(n, j, "power_j");
    int128 rhs = euler_phi(n);
    for (const auto& [d, part] : gcd_class_decomposition(n, j)) {
        // tau(part^d) from the factorization of part
        for (const auto& pp : factorize(part).pairs)
            rhs = checked_mul(rhs, int128(d) * pp.exponent + 1, "power_j");
    }
    return build(args, Rational(lhs), Rational(rhs));
}

IdentityReport power_6(Args& args) {
    std::int64_t n = args.need_n();
    require_power_domain(args.name, n, 6);
    int128 lhs = power_shift_sum(n, 6, "power_6");
    // A collects the prime powers with p = 1 (mod 6), B the rest.
    int128 rhs = euler_phi(n);
    for (const auto& pp : factorize(n).pairs) {
        int scale = pp.prime % 6 == 1 ? 6 : 2;
        rhs = checked_mul(rhs, int128(scale) * pp.exponent + 1, "power_6");
    }
    return build(args, Rational(lhs), Rational(rhs));
}

IdentityReport gcd_kj(Args& args) {
    std::int64_t n = args.need_n();
    int j = args.need_power();
    check_budget(n, budget_limit(default_direct_sum_budget), "gcd_kj");
    int128 raw = 0;
    for (std::int64_t k = 1; k <= n; ++k)
        raw = checked_add(raw, std::gcd(pow_mod(k, j, n), n), "gcd_kj");
    Rational lhs = Rational(raw) / Rational(n);

    Rational rhs;
    for (std::int64_t d : divisors(n)) {
        int128 zero_roots = 1;
        for (const auto& pp : factorize(d).pairs)
            zero_roots = checked_mul(zero_roots, count_power_roots_zero(j, pp.prime, pp.exponent), "gcd_kj");
        rhs += Rational(checked_mul(euler_phi(d), zero_roots, "gcd_kj"), d);
    }
    return build(args, lhs, rhs);
}

using Handler = IdentityReport (*)(Args&);

const std::vector<std::pair<std::string, Handler>>& catalog() {
    static const std::vector<std::pair<std::string, Handler>> entries = {
        {"menon_classic", menon_classic},
        {"sita_ramaiah", sita_ramaiah},
        {"nageswara_rao", nageswara_rao},
        {"richards", richards},
        {"sury", sury},
        {"general_menon", general_menon},
        {"general_menon_t", general_menon_t},
        {"r2_same_shift", r2_same_shift},
        {"pairwise_coprime", pairwise_coprime},
        {"r2_offsets", r2_offsets},
        {"r2_adjacent", r2_adjacent},
        {"quadratic_legendre", quadratic_legendre},
        {"linear_bk_minus_a", linear_bk_minus_a},
        {"square_minus_one", square_minus_one},
        {"power_j", power_j},
        {"power_6", power_6},
        {"gcd_kj", gcd_kj},
    };
    return entries;
}

}  // namespace

IdentityReport named_identity(const std::string& name, const IdentityParams& params) {
    for (const auto& [entry_name, handler] : catalog()) {
        if (entry_name == name) {
            Args args{name, params, {}};
            return handler(args);
        }
    }
    throw std::invalid_argument("named_identity: unknown identity '" + name + "'");
}

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, handler] : catalog()) out.push_back(name);
        return out;
    }();
    return names;
}

std::map<std::int64_t, std::int64_t> gcd_class_decomposition(std::int64_t n, int j) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("gcd_class_decomposition: n must be odd and positive, got " +
                                    std::to_string(n));
    if (j < 1) throw std::invalid_argument("gcd_class_decomposition: j must be >= 1");
    std::map<std::int64_t, std::int64_t> parts;
    for (std::int64_t d : divisors(j)) parts[d] = 1;
    for (const auto& pp : factorize(n).pairs) {
        std::int64_t d = std::gcd(std::int64_t(j), pp.prime - 1);
        parts[d] = narrow_i64(
            checked_mul(parts[d], checked_pow(pp.prime, pp.exponent, "gcd_class_decomposition"),
                        "gcd_class_decomposition"),
            "gcd_class_decomposition");
    }
    return parts;
}

std::int64_t r2_adjacent_prime_power(std::int64_t p, int u, int v, std::int64_t a1, std::int64_t a2) {
    if (!is_prime(p)) throw std::invalid_argument("r2_adjacent_prime_power: p must be prime");
    if (u < 1 || v < 1) throw std::invalid_argument("r2_adjacent_prime_power: u, v must be >= 1");
    std::int64_t gap = a1 - a2;
    if (gap != 1 && gap != -1)
        throw std::invalid_argument("r2_adjacent_prime_power: requires |a1 - a2| = 1");
    bool p1 = a1 % p == 0;
    bool p2 = a2 % p == 0;
    if (p1 && p2) return 1;  // unreachable with |a1 - a2| = 1, kept for the table's sake
    if (p1) return v + 1;
    if (p2) return u + 1;
    return u + v + 1;
}

}  // namespace menon
