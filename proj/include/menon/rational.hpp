#pragma once

#include "menon/checked.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace menon {

// Exact fraction. Always normalized: gcd(|num|, den) = 1 and den >= 1.
// Every operation is exact; overflow throws instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(int value) : num_(value) {}
    Rational(std::int64_t value) : num_(value) {}
    Rational(int128 value) : num_(value) {}
    Rational(int128 num, int128 den);

    int128 num() const { return num_; }
    int128 den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational&) const = default;
    std::strong_ordering operator<=>(const Rational& o) const;

    std::string to_string() const;  // "p" when integral, else "p/q"
    static Rational parse(std::string_view text);

private:
    int128 num_ = 0;
    int128 den_ = 1;
};

std::ostream& operator<<(std::ostream& out, const Rational& value);

}  // namespace menon
