#include "menon/factor.hpp"

#include "menon/checked.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace menon {

std::int64_t Factorization::value() const {
    int128 product = 1;
    for (const auto& pp : pairs)
        product = checked_mul(product, checked_pow(pp.prime, pp.exponent, "Factorization::value"),
                              "Factorization::value");
    return narrow_i64(product, "Factorization::value");
}

Factorization factorize(std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be positive, got " + std::to_string(n));
    Factorization out;
    std::int64_t rest = n;
    for (std::int64_t p = 2; p <= rest / p; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        out.pairs.push_back({p, e});
    }
    if (rest > 1) out.pairs.push_back({rest, 1});
    return out;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2))
        if (n % p == 0) return false;
    return true;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    Factorization f = factorize(n);
    std::vector<std::int64_t> out{1};
    for (const auto& pp : f.pairs) {
        std::size_t previous = out.size();
        std::int64_t power = 1;
        for (int e = 1; e <= pp.exponent; ++e) {
            power *= pp.prime;
            for (std::size_t i = 0; i < previous; ++i) out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace menon
