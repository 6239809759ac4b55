#include "menon/congruence.hpp"

#include "menon/arith.hpp"
#include "menon/checked.hpp"
#include "menon/factor.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace menon {

namespace {

int128 inverse_mod(int128 value, int128 modulus) {
    // Extended Euclid; caller guarantees gcd(value, modulus) = 1.
    int128 r0 = modulus, r1 = value % modulus;
    if (r1 < 0) r1 += modulus;
    int128 t0 = 0, t1 = 1;
    while (r1 != 0) {
        int128 q = r0 / r1;
        int128 r2 = r0 - q * r1;
        int128 t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw std::logic_error("inverse_mod: arguments are not coprime");
    t0 %= modulus;
    if (t0 < 0) t0 += modulus;
    return t0;
}

void validate_system(const PolySystem& system, std::span<const std::int64_t> moduli, const char* context) {
    if (system.polys.empty()) throw std::invalid_argument(std::string(context) + ": empty polynomial system");
    if (system.polys.size() != moduli.size())
        throw std::invalid_argument(std::string(context) + ": " + std::to_string(system.polys.size()) +
                                    " polynomials but " + std::to_string(moduli.size()) + " moduli");
    for (std::int64_t d : moduli)
        if (d < 1)
            throw std::invalid_argument(std::string(context) + ": moduli must be >= 1, got " + std::to_string(d));
}

std::int64_t count_split(const PolySystem& system, std::span<const std::int64_t> moduli, bool coprime_only,
                         const char* context) {
    validate_system(system, moduli, context);
    const std::size_t r = moduli.size();

    // prime -> exponent per position
    std::map<std::int64_t, std::vector<int>> blocks;
    for (std::size_t i = 0; i < r; ++i)
        for (const auto& pp : factorize(moduli[i]).pairs) {
            auto& exps = blocks[pp.prime];
            if (exps.empty()) exps.assign(r, 0);
            exps[i] = pp.exponent;
        }

    std::int64_t work = 0;
    for (const auto& [prime, exps] : blocks) {
        int max_e = 0;
        int active = 0;
        for (int e : exps) {
            max_e = std::max(max_e, e);
            active += e > 0;
        }
        std::int64_t block_len = narrow_i64(checked_pow(prime, max_e, context), context);
        work = narrow_i64(checked_add(work, checked_mul(block_len, active, context), context), context);
    }
    check_budget(work, budget_limit(default_residue_budget), context);

    std::int64_t total = 1;
    for (const auto& [prime, exps] : blocks) {
        int max_e = 0;
        for (int e : exps) max_e = std::max(max_e, e);
        std::int64_t block_len = 1;
        for (int i = 0; i < max_e; ++i) block_len *= prime;

        std::vector<std::int64_t> prime_powers(r, 1);
        for (std::size_t i = 0; i < r; ++i)
            for (int e = 0; e < exps[i]; ++e) prime_powers[i] *= prime;

        std::int64_t count = 0;
        for (std::int64_t x = 0; x < block_len; ++x) {
            if (coprime_only && x % prime == 0) continue;
            bool ok = true;
            for (std::size_t i = 0; i < r && ok; ++i)
                if (exps[i] > 0) ok = system.polys[i].eval_mod(x, prime_powers[i]) == 0;
            count += ok;
        }
        total = narrow_i64(checked_mul(total, count, context), context);
    }
    return total;
}

std::int64_t count_single_pass(const PolySystem& system, std::span<const std::int64_t> moduli,
                               bool coprime_only, const char* context) {
    validate_system(system, moduli, context);
    std::int64_t span_lcm = 1;
    for (std::int64_t d : moduli) span_lcm = lcm_i64(span_lcm, d);
    check_budget(narrow_i64(checked_mul(span_lcm, std::int64_t(moduli.size()), context), context),
                 budget_limit(default_residue_budget), context);

    std::int64_t count = 0;
    for (std::int64_t x = 0; x < span_lcm; ++x) {
        bool ok = true;
        for (std::size_t i = 0; i < moduli.size() && ok; ++i) {
            if (system.polys[i].eval_mod(x, moduli[i]) != 0) ok = false;
            if (ok && coprime_only && std::gcd(x, moduli[i]) != 1) ok = false;
        }
        count += ok;
    }
    return count;
}

}  // namespace

std::optional<CrtSolution> crt_solve(std::span<const std::pair<std::int64_t, std::int64_t>> congruences) {
    if (congruences.empty()) throw std::invalid_argument("crt_solve: empty system");
    for (const auto& [a, d] : congruences)
        if (d < 1) throw std::invalid_argument("crt_solve: moduli must be >= 1, got " + std::to_string(d));

    int128 residue = mod_floor(congruences[0].first, congruences[0].second);
    int128 modulus = congruences[0].second;
    for (std::size_t i = 1; i < congruences.size(); ++i) {
        int128 a = congruences[i].first;
        int128 d = congruences[i].second;
        int128 g = gcd128(modulus, d);
        int128 diff = a - residue;
        if (diff % g != 0) return std::nullopt;
        int128 merged = checked_mul(modulus / g, d, "crt_solve");
        narrow_i64(merged, "crt_solve");  // keep the running modulus in 64-bit range
        int128 step = d / g;
        int128 t = (diff / g) % step;
        if (t < 0) t += step;
        t = t * inverse_mod((modulus / g) % step, step) % step;
        residue = (residue + modulus * t) % merged;
        modulus = merged;
    }
    return CrtSolution{static_cast<std::int64_t>(residue), static_cast<std::int64_t>(modulus)};
}

std::int64_t count_solutions(const PolySystem& system, std::span<const std::int64_t> moduli) {
    return count_split(system, moduli, false, "count_solutions");
}

std::int64_t count_coprime_solutions(const PolySystem& system, std::span<const std::int64_t> moduli) {
    return count_split(system, moduli, true, "count_coprime_solutions");
}

std::int64_t count_solutions_single_pass(const PolySystem& system, std::span<const std::int64_t> moduli) {
    return count_single_pass(system, moduli, false, "count_solutions_single_pass");
}

std::int64_t count_coprime_solutions_single_pass(const PolySystem& system,
                                                 std::span<const std::int64_t> moduli) {
    return count_single_pass(system, moduli, true, "count_coprime_solutions_single_pass");
}

int eta_linear(std::span<const std::int64_t> shifts, std::span<const std::int64_t> moduli) {
    if (shifts.empty() || shifts.size() != moduli.size())
        throw std::invalid_argument("eta_linear: shifts and moduli must be nonempty and equal-length");
    const std::size_t r = moduli.size();
    for (std::size_t i = 0; i < r; ++i) {
        if (moduli[i] < 1)
            throw std::invalid_argument("eta_linear: moduli must be >= 1, got " + std::to_string(moduli[i]));
        // Reduce the shift first; gcd(d, 0) = d makes the zero case literal.
        if (std::gcd(mod_floor(shifts[i], moduli[i]), moduli[i]) != 1) return 0;
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if ((shifts[i] - shifts[j]) % std::gcd(moduli[i], moduli[j]) != 0) return 0;
    return 1;
}

std::int64_t eta_quadratic(std::int64_t a, std::int64_t n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("eta_quadratic: n must be odd and positive, got " + std::to_string(n));
    if (std::gcd(a, n) != 1)
        throw std::invalid_argument("eta_quadratic: gcd(a, n) must be 1");
    std::int64_t product = 1;
    for (const auto& pp : factorize(n).pairs) {
        product *= 1 + legendre_symbol(a, pp.prime);
        if (product == 0) return 0;
    }
    return product;
}

std::int64_t count_power_roots_zero(int j, std::int64_t p, int a) {
    if (j < 1) throw std::invalid_argument("count_power_roots_zero: j must be >= 1");
    if (a < 1) throw std::invalid_argument("count_power_roots_zero: a must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument("count_power_roots_zero: p must be prime, got " + std::to_string(p));
    int exponent = static_cast<int>((std::int64_t(j - 1) * a) / j);
    return narrow_i64(checked_pow(p, exponent, "count_power_roots_zero"), "count_power_roots_zero");
}

std::int64_t count_square_roots_of_unity(std::int64_t p, int a) {
    if (a < 1) throw std::invalid_argument("count_square_roots_of_unity: a must be >= 1");
    if (!is_prime(p))
        throw std::invalid_argument("count_square_roots_of_unity: p must be prime, got " + std::to_string(p));
    if (p != 2) return 2;
    if (a == 1) return 1;
    if (a == 2) return 2;
    return 4;
}

std::int64_t count_jth_roots_of_unity(int j, std::int64_t p, int a) {
    if (j < 1) throw std::invalid_argument("count_jth_roots_of_unity: j must be >= 1");
    if (a < 1) throw std::invalid_argument("count_jth_roots_of_unity: a must be >= 1");
    if (p < 3 || !is_prime(p) || p % 2 == 0)
        throw std::invalid_argument("count_jth_roots_of_unity: p must be an odd prime, got " + std::to_string(p));
    // The unit group mod p^a is cyclic of order p^(a-1)(p-1), so the true
    // count is gcd(j, p^(a-1)(p-1)); it collapses to gcd(j, p-1) only when
    // p does not divide j (or a = 1).
    if (j % p == 0 && a >= 2)
        throw std::invalid_argument("count_jth_roots_of_unity: p | j with a >= 2 is outside the gcd(j, p-1) regime");
    return std::gcd(std::int64_t(j), p - 1);
}

}  // namespace menon
