#include "menon/arith.hpp"

#include "menon/checked.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace menon {

namespace {

void require_positive(std::int64_t n, const char* context) {
    if (n < 1) throw std::invalid_argument(std::string(context) + ": n must be >= 1, got " + std::to_string(n));
}

}  // namespace

std::int64_t mod_floor(std::int64_t value, std::int64_t modulus) {
    require_positive(modulus, "mod_floor");
    std::int64_t r = value % modulus;
    return r < 0 ? r + modulus : r;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exponent, std::int64_t modulus) {
    require_positive(modulus, "pow_mod");
    if (exponent < 0) throw std::invalid_argument("pow_mod: negative exponent");
    int128 result = 1 % modulus;
    int128 b = mod_floor(base, modulus);
    while (exponent > 0) {
        if (exponent & 1) result = result * b % modulus;
        b = b * b % modulus;
        exponent >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

std::int64_t lcm_i64(std::int64_t a, std::int64_t b) {
    require_positive(a, "lcm");
    require_positive(b, "lcm");
    return narrow_i64(lcm128(a, b, "lcm"), "lcm");
}

std::int64_t euler_phi(std::int64_t n) {
    require_positive(n, "euler_phi");
    std::int64_t result = n;
    for (const auto& pp : factorize(n).pairs) result = result / pp.prime * (pp.prime - 1);
    return result;
}

Rational jordan_phi(int t, std::int64_t n) {
    if (t < 0) throw std::invalid_argument("jordan_phi: order must be >= 0, got " + std::to_string(t));
    require_positive(n, "jordan_phi");
    // phi_t(p^e) = p^{te} - p^{t(e-1)}; the empty product gives phi_t(1) = 1.
    int128 result = 1;
    for (const auto& pp : factorize(n).pairs) {
        int128 hi = checked_pow(pp.prime, t * pp.exponent, "jordan_phi");
        int128 lo = checked_pow(pp.prime, t * (pp.exponent - 1), "jordan_phi");
        result = checked_mul(result, hi - lo, "jordan_phi");
    }
    return Rational(result);
}

int mobius(std::int64_t n) {
    require_positive(n, "mobius");
    int parity = 1;
    for (const auto& pp : factorize(n).pairs) {
        if (pp.exponent > 1) return 0;
        parity = -parity;
    }
    return parity;
}

std::int64_t tau(std::int64_t n) {
    require_positive(n, "tau");
    std::int64_t count = 1;
    for (const auto& pp : factorize(n).pairs) count *= pp.exponent + 1;
    return count;
}

int128 sigma(int k, std::int64_t n) {
    if (k < 0) throw std::invalid_argument("sigma: order must be >= 0, got " + std::to_string(k));
    require_positive(n, "sigma");
    int128 result = 1;
    for (const auto& pp : factorize(n).pairs) {
        // 1 + p^k + ... + p^{k e}
        int128 term = 1;
        int128 power = 1;
        int128 pk = checked_pow(pp.prime, k, "sigma");
        for (int e = 1; e <= pp.exponent; ++e) {
            power = checked_mul(power, pk, "sigma");
            term = checked_add(term, power, "sigma");
        }
        result = checked_mul(result, term, "sigma");
    }
    return result;
}

std::int64_t tau_coprime(std::int64_t n, std::int64_t a) {
    require_positive(n, "tau_coprime");
    // Divisors coprime to a use only primes of n that do not divide a;
    // a = 0 is divisible by every prime, leaving just d = 1.
    std::int64_t count = 1;
    for (const auto& pp : factorize(n).pairs)
        if (a % pp.prime != 0) count *= pp.exponent + 1;
    return count;
}

int legendre_symbol(std::int64_t a, std::int64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("legendre_symbol: modulus must be an odd prime, got " + std::to_string(p));
    std::int64_t r = mod_floor(a, p);
    if (r == 0) return 0;
    return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int omega(std::int64_t n) {
    require_positive(n, "omega");
    return static_cast<int>(factorize(n).pairs.size());
}

}  // namespace menon
