#include "menon/checked.hpp"

#include <algorithm>
#include <cstdlib>

namespace menon {

namespace {

constexpr uint128 kSignedMax = (uint128(1) << 127) - 1;

uint128 magnitude(int128 v) {
    return v < 0 ? -uint128(v) : uint128(v);
}

[[noreturn]] void fail(const char* op, int128 a, int128 b, const char* context) {
    throw overflow_error(std::string(context) + ": 128-bit overflow in " + op + "(" +
                         to_string(a) + ", " + to_string(b) + ")");
}

}  // namespace

std::string to_string(int128 value) {
    if (value == 0) return "0";
    uint128 mag = magnitude(value);
    std::string digits;
    while (mag > 0) {
        digits.push_back(static_cast<char>('0' + int(mag % 10)));
        mag /= 10;
    }
    if (value < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

int128 parse_int128(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw std::invalid_argument("parse_int128: no digits in '" + std::string(text) + "'");
    int128 value = 0;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') throw std::invalid_argument("parse_int128: bad digit in '" + std::string(text) + "'");
        value = checked_mul(value, 10, "parse_int128");
        value = checked_add(value, c - '0', "parse_int128");
    }
    return negative ? checked_sub(0, value, "parse_int128") : value;
}

int128 checked_add(int128 a, int128 b, const char* context) {
    int128 out;
    if (__builtin_add_overflow(a, b, &out)) fail("add", a, b, context);
    return out;
}

int128 checked_sub(int128 a, int128 b, const char* context) {
    int128 out;
    if (__builtin_sub_overflow(a, b, &out)) fail("sub", a, b, context);
    return out;
}

int128 checked_mul(int128 a, int128 b, const char* context) {
    int128 out;
    if (__builtin_mul_overflow(a, b, &out)) fail("mul", a, b, context);
    return out;
}

int128 checked_pow(int128 base, int exponent, const char* context) {
    if (exponent < 0) throw std::invalid_argument(std::string(context) + ": negative exponent");
    int128 result = 1;
    int128 b = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1) result = checked_mul(result, b, context);
        e >>= 1;
        if (e > 0) b = checked_mul(b, b, context);
    }
    return result;
}

int128 gcd128(int128 a, int128 b) {
    uint128 x = magnitude(a);
    uint128 y = magnitude(b);
    while (y != 0) {
        uint128 t = x % y;
        x = y;
        y = t;
    }
    if (x > kSignedMax) throw overflow_error("gcd128: magnitude exceeds the signed 128-bit range");
    return int128(x);
}

int128 lcm128(int128 a, int128 b, const char* context) {
    if (a == 0 || b == 0) return 0;
    uint128 g = magnitude(gcd128(a, b));
    uint128 left = magnitude(a) / g;
    uint128 right = magnitude(b);
    if (left != 0 && right > kSignedMax / left)
        fail("lcm", a, b, context);
    return int128(left * right);
}

std::int64_t narrow_i64(int128 value, const char* context) {
    if (value > int128(INT64_MAX) || value < int128(INT64_MIN))
        throw overflow_error(std::string(context) + ": value " + to_string(value) + " does not fit in 64 bits");
    return static_cast<std::int64_t>(value);
}

std::int64_t budget_limit(std::int64_t default_limit) {
    static const std::int64_t override_value = [] {
        const char* env = std::getenv("MENON_BUDGET");
        if (env == nullptr || *env == '\0') return std::int64_t{-1};
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || v <= 0) return std::int64_t{-1};
        return static_cast<std::int64_t>(v);
    }();
    return override_value > 0 ? override_value : default_limit;
}

void check_budget(std::int64_t work, std::int64_t limit, const char* context) {
    if (work > limit)
        throw budget_error(std::string(context) + ": required work " + std::to_string(work) +
                           " exceeds budget " + std::to_string(limit) + " (set MENON_BUDGET to raise it)");
}

}  // namespace menon
