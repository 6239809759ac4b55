// Acceptance gate: one evaluated criterion per line, exit 0 only if all pass.
// Usage: menon_acceptance --cli <path-to-menon-binary>

#include "menon/arith.hpp"
#include "menon/checked.hpp"
#include "menon/congruence.hpp"
#include "menon/groups.hpp"
#include "menon/identities.hpp"
#include "menon/multifunc.hpp"
#include "menon/record.hpp"
#include "menon/sums.hpp"
#include "menon/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

using namespace menon;

int failures_total = 0;

void report(int criterion, bool passed, const std::string& summary) {
    std::cout << "criterion " << criterion << (passed ? " PASS  " : " FAIL  ") << summary << "\n"
              << std::flush;
    if (!passed) ++failures_total;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Menon's identity, exhaustive n <= 2000, under 10 seconds.
void criterion_menon_classic() {
    auto start = std::chrono::steady_clock::now();
    std::int64_t mismatches = 0;
    for (std::int64_t n = 1; n <= 2000; ++n) {
        IdentityParams params;
        params.n = n;
        IdentityReport r = named_identity("menon_classic", params);
        if (!r.match || r.rhs != Rational(euler_phi(n) * tau(n))) ++mismatches;
    }
    double elapsed = seconds_since(start);
    std::ostringstream summary;
    summary << "Menon identity lhs = phi(n)tau(n) for all n <= 2000: " << mismatches << " mismatches, "
            << elapsed << " s (target < 10 s)";
    report(1, mismatches == 0 && elapsed < 10.0, summary.str());
}

// 2. Theorem equivalence suite: formula = direct on >= 500 random instances,
//    with M-independence across {m, 2m, 3m}.
void criterion_theorem_equivalence() {
    verify::Options options;
    options.limit = 500;
    verify::SuiteResult result = verify::run_theorems(options);
    std::ostringstream summary;
    summary << "theorem suites (formula vs direct, M-independence, integrality): " << result.cases
            << " checks, " << result.failures.size() << " failures";
    report(2, result.passed() && result.cases >= 500 * 9, summary.str());
}

// 3. Named-identity catalog, exhaustive sweeps plus frozen spot values.
void criterion_identity_catalog() {
    verify::Options options;
    options.limit = 200;
    verify::SuiteResult result = verify::run_identities(options);

    bool spots = true;
    {
        IdentityParams p;
        p.n = 12;
        spots = spots && named_identity("menon_classic", p).lhs == Rational(24);
        p.n = 4;
        p.index_count = 2;
        spots = spots && named_identity("sury", p).lhs == Rational(14);
        IdentityParams nr;
        nr.n = 2;
        nr.index_count = 2;
        nr.shifts = {1, 1};
        spots = spots && named_identity("nageswara_rao", nr).lhs == Rational(6);
        IdentityParams sq;
        sq.n = 8;
        spots = spots && named_identity("square_minus_one", sq).lhs == Rational(32);
        IdentityParams pj;
        pj.n = 15;
        pj.power = 2;
        spots = spots && named_identity("power_j", pj).lhs == Rational(72);
    }

    std::ostringstream summary;
    summary << "named-identity catalog sweeps: " << result.cases << " cases, " << result.failures.size()
            << " failures, spot values " << (spots ? "ok" : "wrong");
    report(3, result.passed() && spots && result.cases >= 100'000, summary.str());
}

// 4. Linear eta closed form against brute force on the full stated grid.
void criterion_eta_closed_form() {
    std::int64_t cases = 0, mismatches = 0;
    for (int r = 1; r <= 3; ++r) {
        std::vector<std::int64_t> d(static_cast<std::size_t>(r), 1);
        std::vector<std::int64_t> a(static_cast<std::size_t>(r), -5);
        std::function<void(int)> walk_a = [&](int pos) {
            if (pos == r) {
                PolySystem system;
                for (int i = 0; i < r; ++i)
                    system.polys.push_back(IntPoly({-a[static_cast<std::size_t>(i)], 1}));
                ++cases;
                if (eta_linear(a, d) != count_coprime_solutions(system, d)) ++mismatches;
                return;
            }
            for (std::int64_t v = -5; v <= 5; ++v) {
                a[static_cast<std::size_t>(pos)] = v;
                walk_a(pos + 1);
            }
        };
        std::function<void(int)> walk_d = [&](int pos) {
            if (pos == r) {
                walk_a(0);
                return;
            }
            for (std::int64_t v = 1; v <= 12; ++v) {
                d[static_cast<std::size_t>(pos)] = v;
                walk_d(pos + 1);
            }
        };
        walk_d(0);
    }
    // 12^r moduli tuples times 11^r shift tuples for r = 1, 2, 3
    const std::int64_t full_grid = 12 * 11 + 144 * 121 + 1728 * 1331;
    std::ostringstream summary;
    summary << "eta closed form vs coprime solution count, r <= 3, d <= 12, a in [-5,5]: " << cases
            << " grid points, " << mismatches << " mismatches";
    report(4, mismatches == 0 && cases == full_grid, summary.str());
}

// 5. Multiplicativity and cardinality lemma suites.
void criterion_lemma_suites() {
    verify::Options options;
    options.limit = 200;
    verify::SuiteResult result = verify::run_lemmas(options);
    std::ostringstream summary;
    summary << "congruence lemma suites (multiplicativity, unit classes, CRT): " << result.cases
            << " checks, " << result.failures.size() << " failures";
    report(5, result.passed() && result.cases >= 100'000, summary.str());
}

// 6. Cyclic-subgroup counting: three-way agreement over the full tuple grid,
//    the closed form, and the frozen spot values.
void criterion_group_counts() {
    verify::Options options;
    options.limit = 2000;
    verify::SuiteResult result = verify::run_groups(options);

    bool spots = cyclic_count_enumerate({{2, 2}}) == 4 && cyclic_count_enumerate({{4, 2}}) == 6 &&
                 cyclic_count_formula({{2, 2}}) == 4 && cyclic_count_formula({{4, 2}}) == 6;
    bool closed = true;
    for (std::int64_t p : {2, 3, 5})
        for (int u = 1; u <= 4; ++u)
            for (int v = 1; v <= u; ++v) {
                std::int64_t pu = 1, pv = 1;
                for (int i = 0; i < u; ++i) pu *= p;
                for (int i = 0; i < v; ++i) pv *= p;
                closed = closed && cyclic_count_prime_power_pair(p, u, v) == cyclic_count_formula({{pu, pv}});
            }

    // the sweep covers every order tuple with r <= 3 and product <= 2000
    std::int64_t expected_tuples = 2000;
    for (std::int64_t m1 = 1; m1 <= 2000; ++m1) {
        expected_tuples += 2000 / m1;
        for (std::int64_t m2 = 1; m1 * m2 <= 2000; ++m2) expected_tuples += 2000 / (m1 * m2);
    }

    std::ostringstream summary;
    summary << "cyclic subgroup counts (three-way, total order <= 2000; closed form p in {2,3,5}): "
            << result.cases << " checks, " << result.failures.size() << " failures, spots "
            << (spots && closed ? "ok" : "wrong");
    report(6, result.passed() && spots && closed && result.cases >= expected_tuples, summary.str());
}

// 7. Integrality of the all-id R grid on the criterion-2 instance shape.
void criterion_integrality() {
    std::mt19937_64 rng(97);
    std::uniform_int_distribution<int> r_dist(1, 3);
    std::uniform_int_distribution<std::int64_t> m_dist(1, 24);
    std::uniform_int_distribution<int> deg_dist(0, 2);
    std::uniform_int_distribution<std::int64_t> coeff_dist(-5, 5);

    std::int64_t cases = 0, violations = 0;
    for (int trial = 0; trial < 500; ++trial) {
        MenonInstance instance;
        int r = r_dist(rng);
        for (int i = 0; i < r; ++i) {
            instance.moduli.push_back(m_dist(rng));
            instance.funcs.push_back(FuncSpec::id_pow(1));
            std::vector<std::int64_t> coeffs(static_cast<std::size_t>(deg_dist(rng)) + 1);
            for (auto& c : coeffs) c = coeff_dist(rng);
            instance.polys.polys.push_back(IntPoly(std::move(coeffs)));
        }
        Rational value = sum_R_formula(instance);
        ++cases;
        if (!value.is_integer() || value.sign() <= 0) ++violations;

        // every grid term phi(d_1)...phi(d_r)/phi(lcm[d]) is itself an integer
        std::vector<std::vector<std::int64_t>> lists;
        for (std::int64_t m : instance.moduli) lists.push_back(divisors(m));
        std::vector<std::size_t> pick(lists.size(), 0);
        for (;;) {
            int128 phis = 1;
            std::int64_t tuple_lcm = 1;
            for (std::size_t i = 0; i < lists.size(); ++i) {
                phis = checked_mul(phis, euler_phi(lists[i][pick[i]]), "acceptance");
                tuple_lcm = lcm_i64(tuple_lcm, lists[i][pick[i]]);
            }
            ++cases;
            if (phis % euler_phi(tuple_lcm) != 0) ++violations;
            std::size_t i = 0;
            while (i < pick.size()) {
                if (++pick[i] < lists[i].size()) break;
                pick[i] = 0;
                ++i;
            }
            if (i == pick.size()) break;
        }
    }
    std::ostringstream summary;
    summary << "all-id R grid integrality and positivity (500 instances, per-term check): " << cases
            << " checks, " << violations << " violations";
    report(7, violations == 0, summary.str());
}

// 8. S, R and the cyclic count are multiplicative in the moduli at bound 10.
void criterion_multiplicativity() {
    PolySystem polys{{IntPoly::parse("x-1"), IntPoly::parse("x^2-1")}};
    std::vector<FuncSpec> funcs{FuncSpec::id_pow(1), FuncSpec::id_pow(1)};
    MultiFunc s_func{2, [&](std::span<const std::int64_t> m) {
                         return sum_S_formula(MenonInstance{funcs, polys, {m.begin(), m.end()}, 0});
                     }};
    MultiFunc r_func{2, [&](std::span<const std::int64_t> m) {
                         return sum_R_formula(MenonInstance{funcs, polys, {m.begin(), m.end()}, 0});
                     }};
    MultiFunc c_func{2, [](std::span<const std::int64_t> m) {
                         return Rational(cyclic_count_formula({{m[0], m[1]}}));
                     }};
    std::size_t s_bad = check_multiplicative(s_func, 10).size();
    std::size_t r_bad = check_multiplicative(r_func, 10).size();
    std::size_t c_bad = check_multiplicative(c_func, 10).size();
    std::ostringstream summary;
    summary << "multiplicativity of S, R, c in the moduli at bound 10: violations " << s_bad << "/"
            << r_bad << "/" << c_bad;
    report(8, s_bad + r_bad + c_bad == 0, summary.str());
}

// 9. CLI benchmark: the formula path must produce the identical exact value
//    and both timings must be reported; the speed ratio is informational.
void criterion_bench(const std::string& cli_path) {
    std::string command =
        cli_path + " --json bench r-sum --moduli 720,720 --polys x-1,x-1 --funcs id,id --repeat 3 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        report(9, false, "could not spawn the CLI benchmark");
        return;
    }
    std::string output;
    char buffer[4096];
    while (fgets(buffer, sizeof(buffer), pipe) != nullptr) output += buffer;
    int status = pclose(pipe);
    int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

    bool ok = exit_code == 0;
    std::string detail = "exit " + std::to_string(exit_code);
    if (ok) {
        try {
            nlohmann::json j = nlohmann::json::parse(output);
            bool equal = j.at("outputs").at("equal").get<bool>();
            std::uint64_t direct_ns = j.at("outputs").at("direct_ns").get<std::uint64_t>();
            std::uint64_t formula_ns = j.at("outputs").at("formula_ns").get<std::uint64_t>();
            Rational value = rational_from_json(j.at("outputs").at("value"));
            ok = equal && direct_ns > 0 && formula_ns > 0;
            detail = "value " + value.to_string() + ", direct " + std::to_string(direct_ns) +
                     " ns, formula " + std::to_string(formula_ns) + " ns";
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("bad record: ") + e.what();
        }
    }
    report(9, ok, "CLI bench r-sum m=(720,720): equality gate plus reported timings (" + detail + ")");
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli_path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];
    if (cli_path.empty()) {
        std::cerr << "usage: menon_acceptance --cli <path-to-menon-binary>\n";
        return 2;
    }

    criterion_menon_classic();
    criterion_theorem_equivalence();
    criterion_identity_catalog();
    criterion_eta_closed_form();
    criterion_lemma_suites();
    criterion_group_counts();
    criterion_integrality();
    criterion_multiplicativity();
    criterion_bench(cli_path);

    if (failures_total == 0) {
        std::cout << "ACCEPTANCE: 9/9 criteria passed\n";
        return 0;
    }
    std::cout << "ACCEPTANCE: " << (9 - failures_total) << "/9 criteria passed\n";
    return 1;
}
