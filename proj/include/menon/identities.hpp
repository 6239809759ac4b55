#pragma once

#include "menon/sums.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace menon {

// Parameter carrier for the identity catalog. Each identity validates the
// subset it needs and rejects violations by name.
struct IdentityParams {
    std::optional<std::int64_t> n;            // single modulus
    std::vector<std::int64_t> moduli;         // m for the multivariable identities
    std::vector<std::int64_t> shifts;         // offsets a
    std::optional<std::int64_t> linear_scale; // b in gcd(bk - a, n)
    std::optional<int> power;                 // j
    std::optional<int> index_count;           // width s (resp. r) of multi-index sums
    std::vector<int> exponents;               // t_i
    std::optional<FuncSpec> func;             // f
    std::optional<IntPoly> poly;              // g
    std::optional<std::int64_t> big_modulus;  // M, where the statement allows one
};

struct IdentityReport {
    std::string identity_name;
    std::vector<std::pair<std::string, std::string>> parameters;  // sorted by key
    Rational lhs;
    Rational rhs;
    bool match = false;
};

// Evaluates both sides of the named identity independently: the left side by
// direct summation, the right side by the cataloged closed form.
IdentityReport named_identity(const std::string& name, const IdentityParams& params);

const std::vector<std::string>& identity_names();

// For each d | j, the product of the prime powers p^k || n with
// gcd(p - 1, j) = d. The values multiply back to n.
std::map<std::int64_t, std::int64_t> gcd_class_decomposition(std::int64_t n, int j);

// Prime-power table of the |a1 - a2| = 1 entry: value at (p^u, p^v).
std::int64_t r2_adjacent_prime_power(std::int64_t p, int u, int v, std::int64_t a1, std::int64_t a2);

}  // namespace menon
