#include "menon/verify.hpp"

#include "menon/arith.hpp"
#include "menon/checked.hpp"
#include "menon/congruence.hpp"
#include "menon/factor.hpp"
#include "menon/groups.hpp"
#include "menon/identities.hpp"
#include "menon/multifunc.hpp"
#include "menon/sums.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <span>
#include <sstream>

namespace menon::verify {

namespace {

struct Suite {
    SuiteResult result;

    explicit Suite(std::string name) { result.name = std::move(name); }

    void tally(bool ok, const std::string& detail) {
        ++result.cases;
        if (!ok) result.failures.push_back(detail);
    }

    SuiteResult finish() {
        std::sort(result.failures.begin(), result.failures.end());
        return std::move(result);
    }
};

std::string tuple_text(std::span<const std::int64_t> values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out + ")";
}

std::string report_text(const IdentityReport& report) {
    std::string out = report.identity_name + "[";
    for (std::size_t i = 0; i < report.parameters.size(); ++i) {
        if (i) out += ' ';
        out += report.parameters[i].first + "=" + report.parameters[i].second;
    }
    return out + "]: lhs=" + report.lhs.to_string() + " rhs=" + report.rhs.to_string();
}

void check_report(Suite& suite, const IdentityReport& report) {
    suite.tally(report.match, report_text(report));
}

// Walks tuples with components in [1, bound]^width.
template <typename Visit>
void for_each_tuple(std::int64_t bound, int width, Visit&& visit) {
    std::vector<std::int64_t> tuple(static_cast<std::size_t>(width), 1);
    for (;;) {
        visit(std::span<const std::int64_t>(tuple));
        std::size_t i = 0;
        while (i < tuple.size()) {
            if (tuple[i] < bound) {
                ++tuple[i];
                break;
            }
            tuple[i] = 1;
            ++i;
        }
        if (i == tuple.size()) return;
    }
}

IntPoly random_poly(std::mt19937_64& rng, int max_degree, int coeff_span) {
    std::uniform_int_distribution<int> degree_dist(0, max_degree);
    std::uniform_int_distribution<std::int64_t> coeff_dist(-coeff_span, coeff_span);
    int degree = degree_dist(rng);
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(degree) + 1);
    for (auto& c : coeffs) c = coeff_dist(rng);
    return IntPoly(std::move(coeffs));
}

// ---------------------------------------------------------------- theorems --

void theorem_equivalence(Suite& suite, std::mt19937_64& rng, std::int64_t instances) {
    std::uniform_int_distribution<int> r_dist(1, 3);
    std::uniform_int_distribution<std::int64_t> m_dist(1, 24);
    std::uniform_int_distribution<int> f_dist(0, 3);
    const FuncSpec func_pool[] = {FuncSpec::id_pow(1), FuncSpec::id_pow(2), FuncSpec::const_one(),
                                  FuncSpec::euler_phi()};

    for (std::int64_t trial = 0; trial < instances; ++trial) {
        MenonInstance instance;
        int r = r_dist(rng);
        for (int i = 0; i < r; ++i) {
            instance.moduli.push_back(m_dist(rng));
            instance.funcs.push_back(func_pool[f_dist(rng)]);
            instance.polys.polys.push_back(random_poly(rng, 2, 5));
        }
        std::int64_t lcm = instance_lcm(instance);

        std::string label = "instance F=(";
        for (std::size_t i = 0; i < instance.funcs.size(); ++i)
            label += (i ? "," : "") + instance.funcs[i].to_string();
        label += ") G=(";
        for (std::size_t i = 0; i < instance.polys.polys.size(); ++i)
            label += (i ? "," : "") + instance.polys.polys[i].to_string();
        label += ") m=" + tuple_text(instance.moduli);

        Rational s_formula = sum_S_formula(instance);
        Rational r_formula = sum_R_formula(instance);
        Rational r_direct_at_lcm;
        for (int multiplier = 1; multiplier <= 3; ++multiplier) {
            instance.big_modulus = lcm * multiplier;
            Rational s_direct = sum_S_direct(instance);
            Rational r_direct = sum_R_direct(instance);
            if (multiplier == 1) r_direct_at_lcm = r_direct;
            suite.tally(s_direct == s_formula, "theorem S: " + label + " M=" +
                                                   std::to_string(instance.big_modulus) + ": direct " +
                                                   s_direct.to_string() + " != formula " + s_formula.to_string());
            suite.tally(r_direct == r_formula, "theorem R: " + label + " M=" +
                                                   std::to_string(instance.big_modulus) + ": direct " +
                                                   r_direct.to_string() + " != formula " + r_formula.to_string());
            suite.tally(r_direct == r_direct_at_lcm,
                        "M-independence: " + label + " M=" + std::to_string(instance.big_modulus) + ": " +
                            r_direct.to_string() + " != " + r_direct_at_lcm.to_string());
        }

        // All-id system over the same moduli and polynomials: the R grid is a
        // positive integer and so is each of its terms.
        MenonInstance all_id = instance;
        all_id.big_modulus = 0;
        for (auto& f : all_id.funcs) f = FuncSpec::id_pow(1);
        Rational integral = sum_R_formula(all_id);
        suite.tally(integral.is_integer() && integral.sign() > 0,
                    "integrality: " + label + ": R formula value " + integral.to_string());

        bool terms_ok = true;
        std::vector<std::vector<std::int64_t>> lists;
        for (std::int64_t m : all_id.moduli) lists.push_back(divisors(m));
        std::vector<std::size_t> pick(lists.size(), 0);
        for (;;) {
            int128 phis = 1;
            std::int64_t tuple_lcm = 1;
            for (std::size_t i = 0; i < lists.size(); ++i) {
                phis = checked_mul(phis, euler_phi(lists[i][pick[i]]), "verify integrality");
                tuple_lcm = lcm_i64(tuple_lcm, lists[i][pick[i]]);
            }
            if (phis % euler_phi(tuple_lcm) != 0) terms_ok = false;
            std::size_t i = 0;
            while (i < pick.size()) {
                if (++pick[i] < lists[i].size()) break;
                pick[i] = 0;
                ++i;
            }
            if (i == pick.size()) break;
        }
        suite.tally(terms_ok, "integrality per term: " + label);
    }
}

void sum_multiplicativity(Suite& suite, std::int64_t bound) {
    PolySystem polys{{IntPoly::parse("x-1"), IntPoly::parse("x^2-1")}};
    std::vector<FuncSpec> funcs{FuncSpec::id_pow(1), FuncSpec::id_pow(1)};

    MultiFunc s_func{2, [=](std::span<const std::int64_t> m) {
                         MenonInstance instance{funcs, polys, {m.begin(), m.end()}, 0};
                         return sum_S_formula(instance);
                     }};
    MultiFunc r_func{2, [=](std::span<const std::int64_t> m) {
                         MenonInstance instance{funcs, polys, {m.begin(), m.end()}, 0};
                         return sum_R_formula(instance);
                     }};
    auto s_violations = check_multiplicative(s_func, bound);
    suite.tally(s_violations.empty(),
                "S multiplicativity at bound " + std::to_string(bound) + ": " +
                    std::to_string(s_violations.size()) + " violations");
    auto r_violations = check_multiplicative(r_func, bound);
    suite.tally(r_violations.empty(),
                "R multiplicativity at bound " + std::to_string(bound) + ": " +
                    std::to_string(r_violations.size()) + " violations");
}

// -------------------------------------------------------------- identities --

void sweep_single_modulus(Suite& suite, std::int64_t n_bound) {
    for (std::int64_t n = 1; n <= n_bound; ++n) {
        IdentityParams params;
        params.n = n;
        check_report(suite, named_identity("menon_classic", params));
        check_report(suite, named_identity("square_minus_one", params));
    }

    const FuncSpec func_pool[] = {FuncSpec::id_pow(1),  FuncSpec::id_pow(2), FuncSpec::euler_phi(),
                                  FuncSpec::tau(),      FuncSpec::sigma(1),  FuncSpec::const_one()};
    for (const FuncSpec& f : func_pool)
        for (std::int64_t n = 1; n <= n_bound; ++n) {
            IdentityParams params;
            params.n = n;
            params.func = f;
            check_report(suite, named_identity("sita_ramaiah", params));
        }

    const char* poly_pool[] = {"x-1", "x^2-1", "x^2+1", "2*x+1", "x^3-1", "3*x-5"};
    for (const char* text : poly_pool) {
        IntPoly g = IntPoly::parse(text);
        for (std::int64_t n = 1; n <= n_bound; ++n) {
            IdentityParams params;
            params.n = n;
            params.poly = g;
            check_report(suite, named_identity("richards", params));
        }
    }

    for (std::int64_t n = 1; n <= n_bound; ++n)
        for (std::int64_t b = -3; b <= 3; ++b) {
            if (std::gcd(b, n) != 1) continue;
            for (std::int64_t a = -3; a <= 3; ++a) {
                IdentityParams params;
                params.n = n;
                params.shifts = {a};
                params.linear_scale = b;
                check_report(suite, named_identity("linear_bk_minus_a", params));
            }
        }

    for (int j = 1; j <= 6; ++j)
        for (std::int64_t n = 1; n <= n_bound; ++n) {
            IdentityParams params;
            params.n = n;
            params.power = j;
            check_report(suite, named_identity("gcd_kj", params));
        }
}

bool in_power_domain(std::int64_t n, int j) {
    if (n % 2 == 0) return false;
    for (const auto& pp : factorize(n).pairs)
        if (j % pp.prime == 0 && pp.exponent >= 2) return false;
    return true;
}

void sweep_power_identities(Suite& suite, std::int64_t n_bound) {
    for (int j = 1; j <= 8; ++j)
        for (std::int64_t n = 1; n <= n_bound; n += 2) {
            if (!in_power_domain(n, j)) continue;
            IdentityParams params;
            params.n = n;
            params.power = j;
            check_report(suite, named_identity("power_j", params));
        }
    for (std::int64_t n = 1; n <= n_bound; n += 2) {
        if (!in_power_domain(n, 6)) continue;
        IdentityParams params;
        params.n = n;
        check_report(suite, named_identity("power_6", params));
    }

    // The grouped prime powers multiply back to n and land in the right class.
    for (int j : {2, 3, 6, 8})
        for (std::int64_t n = 1; n <= n_bound; n += 2) {
            auto parts = gcd_class_decomposition(n, j);
            int128 product = 1;
            bool classes_ok = true;
            for (const auto& [d, part] : parts) {
                product = checked_mul(product, part, "verify decomposition");
                for (const auto& pp : factorize(part).pairs)
                    if (std::gcd(std::int64_t(j), pp.prime - 1) != d) classes_ok = false;
            }
            suite.tally(classes_ok && product == n,
                        "gcd class decomposition: n=" + std::to_string(n) + " j=" + std::to_string(j));
        }
}

void sweep_multi_index(Suite& suite, std::int64_t n_bound) {
    for (std::int64_t n = 1; n <= n_bound; ++n)
        for (std::int64_t a = -3; a <= 3; ++a) {
            if (std::gcd(a, n) != 1) continue;
            IdentityParams params;
            params.n = n;
            params.index_count = 1;
            params.shifts = {a};
            check_report(suite, named_identity("nageswara_rao", params));
        }
    std::int64_t pair_bound = std::min<std::int64_t>(n_bound, 200);
    for (std::int64_t n = 1; n <= pair_bound; ++n)
        for (std::int64_t a1 = -3; a1 <= 3; ++a1)
            for (std::int64_t a2 = -3; a2 <= 3; ++a2) {
                if (std::gcd(std::gcd(a1, a2), n) != 1) continue;
                IdentityParams params;
                params.n = n;
                params.index_count = 2;
                params.shifts = {a1, a2};
                check_report(suite, named_identity("nageswara_rao", params));
            }
    std::int64_t triple_bound = std::min<std::int64_t>(n_bound, 40);
    for (std::int64_t n = 1; n <= triple_bound; ++n)
        for (std::int64_t a1 = -1; a1 <= 1; ++a1)
            for (std::int64_t a2 = -1; a2 <= 1; ++a2)
                for (std::int64_t a3 = -1; a3 <= 1; ++a3) {
                    if (std::gcd(std::gcd(a1, a2), std::gcd(a3, n)) != 1) continue;
                    IdentityParams params;
                    params.n = n;
                    params.index_count = 3;
                    params.shifts = {a1, a2, a3};
                    check_report(suite, named_identity("nageswara_rao", params));
                }

    for (int r = 1; r <= 2; ++r)
        for (std::int64_t n = 1; n <= pair_bound; ++n) {
            IdentityParams params;
            params.n = n;
            params.index_count = r;
            check_report(suite, named_identity("sury", params));
        }
    for (std::int64_t n = 1; n <= triple_bound; ++n) {
        IdentityParams params;
        params.n = n;
        params.index_count = 3;
        check_report(suite, named_identity("sury", params));
    }
}

void sweep_multi_modulus(Suite& suite, std::int64_t m_bound) {
    for (std::int64_t m1 = 1; m1 <= m_bound; ++m1)
        for (std::int64_t m2 = 1; m2 <= m_bound; ++m2) {
            for (std::int64_t a1 = -3; a1 <= 3; ++a1)
                for (std::int64_t a2 = -3; a2 <= 3; ++a2) {
                    IdentityParams params;
                    params.moduli = {m1, m2};
                    params.shifts = {a1, a2};
                    check_report(suite, named_identity("general_menon", params));
                    check_report(suite, named_identity("r2_offsets", params));
                    if (a1 - a2 == 1 || a2 - a1 == 1)
                        check_report(suite, named_identity("r2_adjacent", params));
                    if (std::gcd(m1, m2) == 1)
                        check_report(suite, named_identity("pairwise_coprime", params));
                }

            std::int64_t lcm = lcm_i64(m1, m2);
            for (std::int64_t a = -3; a <= 3; ++a) {
                if (std::gcd(a, lcm) != 1) continue;
                IdentityParams params;
                params.moduli = {m1, m2};
                params.shifts = {a};
                check_report(suite, named_identity("r2_same_shift", params));
            }

            if (lcm % 2 == 1)
                for (std::int64_t a = -3; a <= 3; ++a) {
                    if (std::gcd(a, lcm) != 1) continue;
                    IdentityParams params;
                    params.moduli = {m1, m2};
                    params.shifts = {a};
                    check_report(suite, named_identity("quadratic_legendre", params));
                }
        }

    const std::vector<std::vector<int>> exponent_pool = {{0, 1}, {1, 2}, {2, 2}};
    for (const auto& exponents : exponent_pool)
        for (std::int64_t m1 = 1; m1 <= m_bound; ++m1)
            for (std::int64_t m2 = 1; m2 <= m_bound; ++m2)
                for (std::int64_t a1 = -2; a1 <= 2; ++a1)
                    for (std::int64_t a2 = -2; a2 <= 2; ++a2) {
                        IdentityParams params;
                        params.moduli = {m1, m2};
                        params.shifts = {a1, a2};
                        params.exponents = exponents;
                        check_report(suite, named_identity("general_menon_t", params));
                    }

    std::int64_t triple_bound = std::min<std::int64_t>(m_bound, 8);
    for (std::int64_t m1 = 1; m1 <= triple_bound; ++m1)
        for (std::int64_t m2 = 1; m2 <= triple_bound; ++m2)
            for (std::int64_t m3 = 1; m3 <= triple_bound; ++m3)
                for (std::int64_t a1 = -1; a1 <= 1; ++a1)
                    for (std::int64_t a2 = -1; a2 <= 1; ++a2)
                        for (std::int64_t a3 = -1; a3 <= 1; ++a3) {
                            IdentityParams params;
                            params.moduli = {m1, m2, m3};
                            params.shifts = {a1, a2, a3};
                            check_report(suite, named_identity("general_menon", params));
                            if (std::gcd(m1, m2) == 1 && std::gcd(m1, m3) == 1 && std::gcd(m2, m3) == 1)
                                check_report(suite, named_identity("pairwise_coprime", params));
                        }

    // Prime-power table of the adjacent-offset entry.
    const std::pair<std::int64_t, std::int64_t> adjacent_offsets[] = {{1, 2},   {2, 1}, {0, 1},
                                                                      {-1, -2}, {2, 3}, {3, 2}};
    for (std::int64_t p : {2, 3, 5})
        for (int u = 1; u <= 3; ++u)
            for (int v = 1; v <= 3; ++v)
                for (auto [a1, a2] : adjacent_offsets) {
                    IdentityParams params;
                    params.moduli = {narrow_i64(checked_pow(p, u, "verify"), "verify"),
                                     narrow_i64(checked_pow(p, v, "verify"), "verify")};
                    params.shifts = {a1, a2};
                    IdentityReport report = named_identity("r2_adjacent", params);
                    std::int64_t table = r2_adjacent_prime_power(p, u, v, a1, a2);
                    suite.tally(report.match && report.rhs == Rational(table),
                                "r2_adjacent prime-power table: p=" + std::to_string(p) +
                                    " u=" + std::to_string(u) + " v=" + std::to_string(v) + " a=(" +
                                    std::to_string(a1) + "," + std::to_string(a2) + "): report rhs " +
                                    report.rhs.to_string() + " table " + std::to_string(table));
                }
}

// ------------------------------------------------------------------ groups --

void sweep_group_tuples(Suite& suite, std::int64_t order_bound) {
    for (int r = 1; r <= 3; ++r) {
        std::vector<std::int64_t> orders(static_cast<std::size_t>(r), 1);
        std::function<void(int, std::int64_t)> walk = [&](int position, std::int64_t product) {
            if (position == r) {
                DirectProductSpec spec{orders};
                std::int64_t formula = cyclic_count_formula(spec);
                std::int64_t burnside = cyclic_count_burnside(spec);
                std::int64_t enumerated = cyclic_count_enumerate(spec);
                suite.tally(formula == burnside && burnside == enumerated,
                            "three-way agreement at " + tuple_text(orders) + ": formula " +
                                std::to_string(formula) + ", burnside " + std::to_string(burnside) +
                                ", enumerate " + std::to_string(enumerated));
                return;
            }
            for (std::int64_t m = 1; m * product <= order_bound; ++m) {
                orders[static_cast<std::size_t>(position)] = m;
                walk(position + 1, m * product);
            }
        };
        walk(0, 1);
    }
}

void group_closed_forms(Suite& suite, std::int64_t pair_bound) {
    for (std::int64_t p : {2, 3, 5})
        for (int u = 1; u <= 4; ++u)
            for (int v = 1; v <= u; ++v) {
                std::int64_t pu = narrow_i64(checked_pow(p, u, "verify"), "verify");
                std::int64_t pv = narrow_i64(checked_pow(p, v, "verify"), "verify");
                std::int64_t closed = cyclic_count_prime_power_pair(p, u, v);
                std::int64_t formula = cyclic_count_formula({{pu, pv}});
                suite.tally(closed == formula, "prime-power pair closed form: p=" + std::to_string(p) +
                                                   " u=" + std::to_string(u) + " v=" + std::to_string(v) +
                                                   ": closed " + std::to_string(closed) + " formula " +
                                                   std::to_string(formula));
            }

    for (std::int64_t m1 = 1; m1 <= pair_bound; ++m1)
        for (std::int64_t m2 = 1; m2 <= pair_bound; ++m2) {
            int128 grid = 0;
            for (std::int64_t d1 : divisors(m1))
                for (std::int64_t d2 : divisors(m2))
                    grid = checked_add(grid, euler_phi(std::gcd(d1, d2)), "verify");
            std::int64_t formula = cyclic_count_formula({{m1, m2}});
            suite.tally(Rational(grid) == Rational(formula),
                        "two-factor gcd grid: m=(" + std::to_string(m1) + "," + std::to_string(m2) +
                            "): grid " + to_string(grid) + " formula " + std::to_string(formula));
        }
}

void group_symmetries(Suite& suite, std::int64_t order_bound, std::int64_t mult_bound) {
    for (std::int64_t m1 = 1; m1 * m1 <= order_bound; ++m1)
        for (std::int64_t m2 = m1; m1 * m2 <= order_bound; ++m2) {
            std::int64_t forward = cyclic_count_formula({{m1, m2}});
            std::int64_t backward = cyclic_count_formula({{m2, m1}});
            suite.tally(forward == backward, "permutation invariance r=2 at (" + std::to_string(m1) + "," +
                                                 std::to_string(m2) + ")");
        }
    for (std::int64_t m1 = 1; m1 <= 6; ++m1)
        for (std::int64_t m2 = 1; m2 <= 6; ++m2)
            for (std::int64_t m3 = 1; m3 <= 6; ++m3) {
                std::int64_t base = cyclic_count_formula({{m1, m2, m3}});
                bool ok = cyclic_count_formula({{m1, m3, m2}}) == base &&
                          cyclic_count_formula({{m2, m1, m3}}) == base &&
                          cyclic_count_formula({{m3, m2, m1}}) == base;
                suite.tally(ok, "permutation invariance r=3 at " +
                                    tuple_text(std::vector<std::int64_t>{m1, m2, m3}));
            }

    MultiFunc count_func{2, [](std::span<const std::int64_t> m) {
                             return Rational(cyclic_count_formula({{m[0], m[1]}}));
                         }};
    auto violations = check_multiplicative(count_func, mult_bound);
    suite.tally(violations.empty(), "cyclic count multiplicativity at bound " + std::to_string(mult_bound) +
                                        ": " + std::to_string(violations.size()) + " violations");
}

// ------------------------------------------------------------------ lemmas --

void lemma_multiplicativity(Suite& suite, std::mt19937_64& rng, std::int64_t instances) {
    std::uniform_int_distribution<int> r_dist(1, 3);
    std::uniform_int_distribution<std::int64_t> m_dist(1, 30);

    for (std::int64_t trial = 0; trial < instances; ++trial) {
        int r = r_dist(rng);
        PolySystem system;
        for (int i = 0; i < r; ++i) system.polys.push_back(random_poly(rng, 3, 6));

        std::vector<std::int64_t> m(static_cast<std::size_t>(r)), n(static_cast<std::size_t>(r)),
            mn(static_cast<std::size_t>(r));
        for (;;) {
            int128 pm = 1, pn = 1;
            std::int64_t joint_lcm = 1;
            for (int i = 0; i < r; ++i) {
                m[static_cast<std::size_t>(i)] = m_dist(rng);
                n[static_cast<std::size_t>(i)] = m_dist(rng);
                pm = checked_mul(pm, m[static_cast<std::size_t>(i)], "verify lemma");
                pn = checked_mul(pn, n[static_cast<std::size_t>(i)], "verify lemma");
            }
            if (gcd128(pm, pn) != 1) continue;
            for (int i = 0; i < r; ++i) {
                mn[static_cast<std::size_t>(i)] =
                    m[static_cast<std::size_t>(i)] * n[static_cast<std::size_t>(i)];
                joint_lcm = lcm_i64(joint_lcm, mn[static_cast<std::size_t>(i)]);
            }
            if (joint_lcm <= 50'000) break;
        }

        std::string label = "G=(";
        for (std::size_t i = 0; i < system.polys.size(); ++i)
            label += (i ? "," : "") + system.polys[i].to_string();
        label += ") m=" + tuple_text(m) + " n=" + tuple_text(n);

        std::int64_t joint = count_solutions_single_pass(system, mn);
        std::int64_t split_product = count_solutions_single_pass(system, m) *
                                     count_solutions_single_pass(system, n);
        suite.tally(joint == split_product, "N_G multiplicativity: " + label + ": " + std::to_string(joint) +
                                                " != " + std::to_string(split_product));
        suite.tally(count_solutions(system, mn) == joint,
                    "N_G split vs single pass: " + label);

        std::int64_t joint_coprime = count_coprime_solutions_single_pass(system, mn);
        std::int64_t split_coprime = count_coprime_solutions_single_pass(system, m) *
                                     count_coprime_solutions_single_pass(system, n);
        suite.tally(joint_coprime == split_coprime, "eta_G multiplicativity: " + label + ": " +
                                                        std::to_string(joint_coprime) + " != " +
                                                        std::to_string(split_coprime));
        suite.tally(count_coprime_solutions(system, mn) == joint_coprime,
                    "eta_G split vs single pass: " + label);
    }
}

void lemma_unit_classes(Suite& suite, std::int64_t n_bound) {
    for (std::int64_t n = 1; n <= n_bound; ++n)
        for (std::int64_t d : divisors(n)) {
            std::int64_t expected = euler_phi(n) / euler_phi(d);
            for (std::int64_t x = 1; x <= d; ++x) {
                if (std::gcd(x, d) != 1) continue;
                std::int64_t count = 0;
                for (std::int64_t k = x; k <= n; k += d) count += std::gcd(k, n) == 1;
                suite.tally(count == expected, "unit-class cardinality: n=" + std::to_string(n) + " d=" +
                                                   std::to_string(d) + " x=" + std::to_string(x) + ": " +
                                                   std::to_string(count) + " != " + std::to_string(expected));
            }
        }
}

void crt_properties(Suite& suite, std::mt19937_64& rng, std::int64_t instances) {
    std::uniform_int_distribution<int> len_dist(1, 4);
    std::uniform_int_distribution<std::int64_t> mod_dist(1, 18);
    std::uniform_int_distribution<std::int64_t> res_dist(-20, 20);

    for (std::int64_t trial = 0; trial < instances; ++trial) {
        int len = len_dist(rng);
        std::vector<std::pair<std::int64_t, std::int64_t>> system;
        std::int64_t span_lcm = 1;
        bool pairwise_ok = true;
        for (int i = 0; i < len; ++i) system.emplace_back(res_dist(rng), mod_dist(rng));
        for (int i = 0; i < len; ++i) {
            span_lcm = lcm_i64(span_lcm, system[static_cast<std::size_t>(i)].second);
            for (int j = i + 1; j < len; ++j) {
                auto [ai, di] = system[static_cast<std::size_t>(i)];
                auto [aj, dj] = system[static_cast<std::size_t>(j)];
                if ((ai - aj) % std::gcd(di, dj) != 0) pairwise_ok = false;
            }
        }

        std::string label = "crt system";
        for (auto [a, d] : system) label += " (" + std::to_string(a) + " mod " + std::to_string(d) + ")";

        auto outcome = crt_solve(system);
        suite.tally(outcome.has_value() == pairwise_ok,
                    label + ": solvable=" + std::to_string(outcome.has_value()) + " pairwise=" +
                        std::to_string(pairwise_ok));
        std::int64_t matches = 0;
        for (std::int64_t x = 0; x < span_lcm; ++x) {
            bool all = true;
            for (auto [a, d] : system)
                if (mod_floor(x - a, d) != 0) all = false;
            matches += all;
        }
        if (outcome) {
            bool satisfies = outcome->modulus == span_lcm && outcome->residue >= 0 &&
                             outcome->residue < outcome->modulus;
            for (auto [a, d] : system)
                if (mod_floor(outcome->residue - a, d) != 0) satisfies = false;
            suite.tally(satisfies && matches == 1,
                        label + ": residue " + std::to_string(outcome->residue) + " mod " +
                            std::to_string(outcome->modulus) + " (brute matches " + std::to_string(matches) +
                            ")");
        } else {
            suite.tally(matches == 0, label + ": no solution claimed but brute force found " +
                                          std::to_string(matches));
        }
    }
}

void eta_closed_form(Suite& suite, std::int64_t d_bound, std::int64_t shift_span) {
    for (int r = 1; r <= 3; ++r) {
        std::vector<std::int64_t> d(static_cast<std::size_t>(r), 1);
        std::vector<std::int64_t> a(static_cast<std::size_t>(r), -shift_span);
        std::function<void(int)> walk_shifts = [&](int position) {
            if (position == r) {
                PolySystem system;
                for (int i = 0; i < r; ++i) {
                    std::vector<std::int64_t> coeffs = {-a[static_cast<std::size_t>(i)], 1};
                    system.polys.push_back(IntPoly(std::move(coeffs)));
                }
                std::int64_t brute = count_coprime_solutions(system, d);
                int closed = eta_linear(a, d);
                suite.tally(brute == closed, "eta closed form: a=" + tuple_text(a) + " d=" + tuple_text(d) +
                                                 ": brute " + std::to_string(brute) + " != closed " +
                                                 std::to_string(closed));
                return;
            }
            for (std::int64_t v = -shift_span; v <= shift_span; ++v) {
                a[static_cast<std::size_t>(position)] = v;
                walk_shifts(position + 1);
            }
        };
        std::function<void(int)> walk_moduli = [&](int position) {
            if (position == r) {
                walk_shifts(0);
                return;
            }
            for (std::int64_t v = 1; v <= d_bound; ++v) {
                d[static_cast<std::size_t>(position)] = v;
                walk_moduli(position + 1);
            }
        };
        walk_moduli(0);
    }
}

}  // namespace

SuiteResult run_theorems(const Options& options) {
    Suite suite("theorems");
    std::mt19937_64 rng(options.seed);
    std::int64_t instances = options.limit > 0 ? options.limit : 500;
    theorem_equivalence(suite, rng, instances);
    sum_multiplicativity(suite, 10);
    return suite.finish();
}

SuiteResult run_identities(const Options& options) {
    Suite suite("identities");
    std::int64_t n_bound = options.limit > 0 ? options.limit : 200;
    std::int64_t m_bound = n_bound >= 200 ? 20 : std::max<std::int64_t>(4, n_bound / 10);
    sweep_single_modulus(suite, n_bound);
    sweep_power_identities(suite, n_bound);
    sweep_multi_index(suite, n_bound);
    sweep_multi_modulus(suite, m_bound);
    return suite.finish();
}

SuiteResult run_groups(const Options& options) {
    Suite suite("groups");
    std::int64_t order_bound = options.limit > 0 ? options.limit : 2000;
    sweep_group_tuples(suite, order_bound);
    group_closed_forms(suite, std::min<std::int64_t>(40, order_bound));
    group_symmetries(suite, std::min<std::int64_t>(200, order_bound), 10);
    return suite.finish();
}

SuiteResult run_lemmas(const Options& options) {
    Suite suite("lemmas");
    std::mt19937_64 rng(options.seed);
    std::int64_t n_bound = options.limit > 0 ? options.limit : 200;
    lemma_multiplicativity(suite, rng, std::min<std::int64_t>(n_bound, 300));
    lemma_unit_classes(suite, n_bound);
    crt_properties(suite, rng, std::min<std::int64_t>(n_bound, 300));
    if (n_bound >= 200)
        eta_closed_form(suite, 12, 5);
    else
        eta_closed_form(suite, 8, 3);
    return suite.finish();
}

std::vector<SuiteResult> run_all(const Options& options) {
    return {run_theorems(options), run_identities(options), run_groups(options), run_lemmas(options)};
}

}  // namespace menon::verify
