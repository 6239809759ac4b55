#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace menon {

// All value arithmetic runs in signed 128-bit. An operation that would leave
// that range throws overflow_error naming the operation; nothing ever wraps.
using int128 = __int128;
using uint128 = unsigned __int128;

class overflow_error : public std::runtime_error {
public:
    explicit overflow_error(const std::string& message) : std::runtime_error(message) {}
};

// Thrown when an evaluation would exceed the configured work budget.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& message) : std::runtime_error(message) {}
};

std::string to_string(int128 value);
int128 parse_int128(std::string_view text);

int128 checked_add(int128 a, int128 b, const char* context);
int128 checked_sub(int128 a, int128 b, const char* context);
int128 checked_mul(int128 a, int128 b, const char* context);
int128 checked_pow(int128 base, int exponent, const char* context);

// gcd of absolute values; gcd(x, 0) = |x|.
int128 gcd128(int128 a, int128 b);
int128 lcm128(int128 a, int128 b, const char* context);

std::int64_t narrow_i64(int128 value, const char* context);

// Budget a work unit is charged against. Defaults are per call site;
// MENON_BUDGET, when set, overrides every default.
std::int64_t budget_limit(std::int64_t default_limit);
void check_budget(std::int64_t work, std::int64_t limit, const char* context);

}  // namespace menon
