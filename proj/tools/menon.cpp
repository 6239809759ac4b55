#include "menon/arith.hpp"
#include "menon/checked.hpp"
#include "menon/groups.hpp"
#include "menon/identities.hpp"
#include "menon/record.hpp"
#include "menon/sums.hpp"
#include "menon/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace menon;

std::uint64_t now_ns() {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now().time_since_epoch())
            .count());
}

std::vector<std::int64_t> parse_i64_list(const std::string& text, const char* what) {
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        std::string item =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        if (item.empty()) throw std::invalid_argument(std::string(what) + ": empty list item");
        out.push_back(narrow_i64(parse_int128(item), what));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    for (std::int64_t v : parse_i64_list(text, what)) {
        if (v < -1'000'000 || v > 1'000'000)
            throw std::invalid_argument(std::string(what) + ": value out of range");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

struct InstanceFlags {
    std::string moduli;
    std::string polys;
    std::string funcs;
    std::int64_t big_modulus = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--moduli", moduli, "comma-separated moduli m_1,...,m_r")->required();
        cmd->add_option("--polys", polys, "comma-separated polynomials g_1,...,g_r (grammar: x^2-1, 3*x-5, ...)")
            ->required();
        cmd->add_option("--funcs", funcs,
                        "comma-separated functions f_1,...,f_r (id, id^t, one, phi, tau, sigma_k, table:<path>)")
            ->required();
        cmd->add_option("--M", big_modulus, "outer modulus, a multiple of lcm[m] (default: the lcm itself)");
    }

    MenonInstance build() const {
        MenonInstance instance;
        instance.moduli = parse_i64_list(moduli, "--moduli");
        instance.polys.polys = parse_poly_list(polys);
        instance.funcs = parse_func_list(funcs);
        instance.big_modulus = big_modulus;
        return instance;
    }
};

nlohmann::json instance_inputs(const MenonInstance& instance, std::int64_t resolved_M) {
    nlohmann::json polys = nlohmann::json::array();
    for (const auto& g : instance.polys.polys) polys.push_back(g.to_string());
    nlohmann::json funcs = nlohmann::json::array();
    for (const auto& f : instance.funcs) funcs.push_back(f.to_string());
    return {{"moduli", instance.moduli}, {"polys", polys}, {"funcs", funcs}, {"M", resolved_M}};
}

void emit(const RunRecord& record, bool json, const std::vector<std::string>& human_lines) {
    if (json) {
        std::cout << record_to_json(record).dump() << "\n";
    } else {
        for (const auto& line : human_lines) std::cout << line << "\n";
    }
}

int run_sum(bool s_kind, const InstanceFlags& flags, bool json) {
    MenonInstance instance = flags.build();
    std::int64_t lcm = instance_lcm(instance);
    std::int64_t resolved_M = instance.big_modulus == 0 ? lcm : instance.big_modulus;

    std::uint64_t start = now_ns();
    Rational direct = s_kind ? sum_S_direct(instance) : sum_R_direct(instance);
    Rational formula = s_kind ? sum_S_formula(instance) : sum_R_formula(instance);
    std::uint64_t elapsed = now_ns() - start;
    if (direct != formula)
        throw std::logic_error(std::string(s_kind ? "s-sum" : "r-sum") + ": direct sum " +
                               direct.to_string() + " disagrees with the divisor formula " +
                               formula.to_string());

    RunRecord record;
    record.command = s_kind ? "s-sum" : "r-sum";
    record.inputs = instance_inputs(instance, resolved_M);
    record.outputs = {{"value", rational_to_json(direct)}};
    record.timing_ns = elapsed;
    emit(record, json, {record.command + " = " + direct.to_string()});
    return 0;
}

struct IdentityFlags {
    std::string name;
    std::optional<std::int64_t> n;
    std::string moduli;
    std::string shifts;
    std::optional<std::int64_t> linear_scale;
    std::optional<int> power;
    std::optional<int> index_count;
    std::string exponents;
    std::string func;
    std::string poly;
    std::optional<std::int64_t> big_modulus;
};

int run_identity(const IdentityFlags& flags, bool json) {
    IdentityParams params;
    params.n = flags.n;
    if (!flags.moduli.empty()) params.moduli = parse_i64_list(flags.moduli, "--m");
    if (!flags.shifts.empty()) params.shifts = parse_i64_list(flags.shifts, "--a");
    params.linear_scale = flags.linear_scale;
    params.power = flags.power;
    params.index_count = flags.index_count;
    if (!flags.exponents.empty()) params.exponents = parse_int_list(flags.exponents, "--t");
    if (!flags.func.empty()) params.func = FuncSpec::parse(flags.func);
    if (!flags.poly.empty()) params.poly = IntPoly::parse(flags.poly);
    params.big_modulus = flags.big_modulus;

    std::uint64_t start = now_ns();
    IdentityReport report = named_identity(flags.name, params);
    std::uint64_t elapsed = now_ns() - start;

    nlohmann::json inputs{{"name", report.identity_name}};
    for (const auto& [key, value] : report.parameters) inputs[key] = value;

    RunRecord record;
    record.command = "identity";
    record.inputs = inputs;
    record.outputs = {{"lhs", rational_to_json(report.lhs)},
                      {"rhs", rational_to_json(report.rhs)},
                      {"match", report.match}};
    record.timing_ns = elapsed;
    emit(record, json,
         {"identity = " + report.identity_name, "lhs = " + report.lhs.to_string(),
          "rhs = " + report.rhs.to_string(), std::string("match = ") + (report.match ? "true" : "false")});
    return 0;
}

int run_cyclic_count(const std::string& orders_text, const std::string& method, bool json) {
    DirectProductSpec spec{parse_i64_list(orders_text, "--orders")};

    RunRecord record;
    record.command = "cyclic-count";
    record.inputs = {{"orders", spec.orders}, {"method", method}};
    std::uint64_t start = now_ns();
    std::vector<std::string> lines;
    if (method == "all") {
        std::int64_t formula = cyclic_count_formula(spec);
        std::int64_t burnside = cyclic_count_burnside(spec);
        std::int64_t enumerated = cyclic_count_enumerate(spec);
        bool agree = formula == burnside && burnside == enumerated;
        record.outputs = {{"formula", formula},
                          {"burnside", burnside},
                          {"enumerate", enumerated},
                          {"agree", agree}};
        lines = {"formula = " + std::to_string(formula), "burnside = " + std::to_string(burnside),
                 "enumerate = " + std::to_string(enumerated),
                 std::string("agree = ") + (agree ? "true" : "false")};
        if (!agree) {
            record.timing_ns = now_ns() - start;
            emit(record, json, lines);
            return 1;
        }
    } else {
        std::int64_t value = method == "burnside"    ? cyclic_count_burnside(spec)
                             : method == "enumerate" ? cyclic_count_enumerate(spec)
                                                     : cyclic_count_formula(spec);
        record.outputs = {{"value", value}};
        lines = {"cyclic-count = " + std::to_string(value)};
    }
    record.timing_ns = now_ns() - start;
    emit(record, json, lines);
    return 0;
}

int run_verify(const std::string& suite_name, std::int64_t limit, std::uint64_t seed, bool json) {
    verify::Options options;
    options.limit = limit;
    options.seed = seed;

    std::uint64_t start = now_ns();
    std::vector<verify::SuiteResult> results;
    if (suite_name == "all") {
        results = verify::run_all(options);
    } else if (suite_name == "theorems") {
        results = {verify::run_theorems(options)};
    } else if (suite_name == "identities") {
        results = {verify::run_identities(options)};
    } else if (suite_name == "groups") {
        results = {verify::run_groups(options)};
    } else if (suite_name == "lemmas") {
        results = {verify::run_lemmas(options)};
    } else {
        throw std::invalid_argument("verify: unknown suite '" + suite_name + "'");
    }
    std::uint64_t elapsed = now_ns() - start;

    SuiteTally tally;
    std::vector<std::string> lines;
    nlohmann::json per_suite = nlohmann::json::object();
    bool passed = true;
    for (const auto& result : results) {
        tally.cases += result.cases;
        for (const auto& failure : result.failures) tally.failures.push_back(result.name + ": " + failure);
        per_suite[result.name] = {{"cases", result.cases},
                                  {"failures", static_cast<std::int64_t>(result.failures.size())}};
        lines.push_back("suite " + result.name + ": " + std::to_string(result.cases) + " cases, " +
                        std::to_string(result.failures.size()) + " failures");
        for (const auto& failure : result.failures) lines.push_back("  FAIL " + failure);
        passed = passed && result.passed();
    }
    lines.push_back(passed ? "PASS" : "FAIL");

    RunRecord record;
    record.command = "verify";
    record.inputs = {{"suite", suite_name}, {"limit", limit}, {"seed", seed}};
    record.outputs = {{"suites", per_suite}, {"passed", passed}};
    record.timing_ns = elapsed;
    record.suite = std::move(tally);
    emit(record, json, lines);
    return passed ? 0 : 1;
}

std::string format_ratio(std::uint64_t slow_ns, std::uint64_t fast_ns) {
    if (fast_ns == 0) return "inf";
    double ratio = static_cast<double>(slow_ns) / static_cast<double>(fast_ns);
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.2f", ratio);
    return buffer;
}

template <typename F>
std::uint64_t best_of(int repeat, F&& run) {
    std::uint64_t best = UINT64_MAX;
    for (int i = 0; i < repeat; ++i) {
        std::uint64_t start = now_ns();
        run();
        best = std::min(best, now_ns() - start);
    }
    return best;
}

int run_bench_sum(bool s_kind, const InstanceFlags& flags, int repeat, bool json) {
    MenonInstance instance = flags.build();
    std::int64_t lcm = instance_lcm(instance);
    std::int64_t resolved_M = instance.big_modulus == 0 ? lcm : instance.big_modulus;

    Rational direct = s_kind ? sum_S_direct(instance) : sum_R_direct(instance);
    Rational formula = s_kind ? sum_S_formula(instance) : sum_R_formula(instance);
    std::string command = std::string("bench ") + (s_kind ? "s-sum" : "r-sum");
    if (direct != formula) {
        std::cerr << command << ": value mismatch: direct " << direct << " vs formula " << formula << "\n";
        return 1;
    }

    std::uint64_t direct_ns =
        best_of(repeat, [&] { s_kind ? sum_S_direct(instance) : sum_R_direct(instance); });
    std::uint64_t formula_ns =
        best_of(repeat, [&] { s_kind ? sum_S_formula(instance) : sum_R_formula(instance); });

    RunRecord record;
    record.command = command;
    record.inputs = instance_inputs(instance, resolved_M);
    record.inputs["repeat"] = repeat;
    record.outputs = {{"value", rational_to_json(direct)},
                      {"direct_ns", direct_ns},
                      {"formula_ns", formula_ns},
                      {"equal", true}};
    record.timing_ns = direct_ns + formula_ns;
    emit(record, json,
         {"value = " + direct.to_string(), "direct_ns = " + std::to_string(direct_ns),
          "formula_ns = " + std::to_string(formula_ns),
          "ratio = " + format_ratio(direct_ns, formula_ns)});
    return 0;
}

int run_bench_cyclic(const std::string& orders_text, int repeat, bool json) {
    DirectProductSpec spec{parse_i64_list(orders_text, "--orders")};
    std::int64_t formula = cyclic_count_formula(spec);
    std::int64_t enumerated = cyclic_count_enumerate(spec);
    if (formula != enumerated) {
        std::cerr << "bench cyclic-count: value mismatch: formula " << formula << " vs enumerate "
                  << enumerated << "\n";
        return 1;
    }
    std::uint64_t formula_ns = best_of(repeat, [&] { cyclic_count_formula(spec); });
    std::uint64_t enumerate_ns = best_of(repeat, [&] { cyclic_count_enumerate(spec); });

    RunRecord record;
    record.command = "bench cyclic-count";
    record.inputs = {{"orders", spec.orders}, {"repeat", repeat}};
    record.outputs = {{"value", formula},
                      {"formula_ns", formula_ns},
                      {"enumerate_ns", enumerate_ns},
                      {"equal", true}};
    record.timing_ns = formula_ns + enumerate_ns;
    emit(record, json,
         {"value = " + std::to_string(formula), "formula_ns = " + std::to_string(formula_ns),
          "enumerate_ns = " + std::to_string(enumerate_ns),
          "ratio = " + format_ratio(enumerate_ns, formula_ns)});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact evaluation and verification of Menon-type gcd sums, polynomial congruence counts, "
                 "and cyclic-subgroup counts for direct products of cyclic groups"};
    app.require_subcommand(1);
    app.footer("Work budgets default to 10^7 evaluations (10^5 elements for subgroup enumeration); "
               "set MENON_BUDGET to override all of them.");

    bool json = false;
    app.add_flag("--json", json, "emit one structured JSON record instead of text");

    InstanceFlags s_flags, r_flags;
    CLI::App* s_cmd = app.add_subcommand("s-sum", "average of prod f_i(gcd(g_i(k), m_i)) over k in [1, M]");
    s_flags.attach(s_cmd);
    CLI::App* r_cmd =
        app.add_subcommand("r-sum", "same average restricted to k coprime to M, normalized by phi(M)");
    r_flags.attach(r_cmd);

    IdentityFlags identity_flags;
    CLI::App* id_cmd = app.add_subcommand("identity", "evaluate both sides of a named identity");
    id_cmd->add_option("--name", identity_flags.name, "identity name (see --list)")->required();
    id_cmd->add_option("--n", identity_flags.n, "single modulus n");
    id_cmd->add_option("--m", identity_flags.moduli, "comma-separated moduli");
    id_cmd->add_option("--a", identity_flags.shifts, "comma-separated offsets");
    id_cmd->add_option("--b", identity_flags.linear_scale, "linear coefficient b");
    id_cmd->add_option("--j", identity_flags.power, "power j");
    id_cmd->add_option("--r", identity_flags.index_count, "index count (s or r) of multi-index sums");
    id_cmd->add_option("--t", identity_flags.exponents, "comma-separated exponents t_i");
    id_cmd->add_option("--f", identity_flags.func, "function f (id, id^t, one, phi, tau, sigma_k, table:<path>)");
    id_cmd->add_option("--g", identity_flags.poly, "polynomial g");
    id_cmd->add_option("--M", identity_flags.big_modulus, "outer modulus where the statement allows one");

    CLI::App* list_cmd = app.add_subcommand("list-identities", "print the identity catalog names");

    std::string orders_text;
    std::string method = "formula";
    CLI::App* cyclic_cmd =
        app.add_subcommand("cyclic-count", "number of cyclic subgroups of C_{m_1} x ... x C_{m_r}");
    cyclic_cmd->add_option("--orders", orders_text, "comma-separated cyclic orders m_1,...,m_r")->required();
    cyclic_cmd->add_option("--method", method, "formula | burnside | enumerate | all")
        ->check(CLI::IsMember({"formula", "burnside", "enumerate", "all"}));

    std::string suite_name = "all";
    std::int64_t limit = 0;
    std::uint64_t seed = 20260809;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the property suites");
    verify_cmd->add_option("--suite", suite_name, "theorems | identities | groups | lemmas | all")
        ->check(CLI::IsMember({"theorems", "identities", "groups", "lemmas", "all"}));
    verify_cmd->add_option("--limit", limit, "scale the primary grid bound (0 = suite default)");
    verify_cmd->add_option("--seed", seed, "seed for the randomized grids");

    int repeat = 3;
    InstanceFlags bench_s_flags, bench_r_flags;
    std::string bench_orders;
    CLI::App* bench_cmd = app.add_subcommand("bench", "time the direct path against the formula path");
    bench_cmd->require_subcommand(1);
    bench_cmd->fallthrough();
    bench_cmd->add_option("--repeat", repeat, "timing repetitions (best run is reported)")
        ->check(CLI::PositiveNumber);
    CLI::App* bench_s = bench_cmd->add_subcommand("s-sum", "benchmark the S sum");
    bench_s_flags.attach(bench_s);
    CLI::App* bench_r = bench_cmd->add_subcommand("r-sum", "benchmark the R sum");
    bench_r_flags.attach(bench_r);
    CLI::App* bench_cyclic = bench_cmd->add_subcommand("cyclic-count", "benchmark cyclic-subgroup counting");
    bench_cyclic->add_option("--orders", bench_orders, "comma-separated cyclic orders")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(s_cmd)) return run_sum(true, s_flags, json);
        if (app.got_subcommand(r_cmd)) return run_sum(false, r_flags, json);
        if (app.got_subcommand(id_cmd)) return run_identity(identity_flags, json);
        if (app.got_subcommand(list_cmd)) {
            for (const auto& name : identity_names()) std::cout << name << "\n";
            return 0;
        }
        if (app.got_subcommand(cyclic_cmd)) return run_cyclic_count(orders_text, method, json);
        if (app.got_subcommand(verify_cmd)) return run_verify(suite_name, limit, seed, json);
        if (app.got_subcommand(bench_cmd)) {
            if (bench_cmd->got_subcommand(bench_s)) return run_bench_sum(true, bench_s_flags, repeat, json);
            if (bench_cmd->got_subcommand(bench_r)) return run_bench_sum(false, bench_r_flags, repeat, json);
            return run_bench_cyclic(bench_orders, repeat, json);
        }
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
