#include "menon/rational.hpp"

#include <ostream>

namespace menon {

Rational::Rational(int128 num, int128 den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
        num = checked_sub(0, num, "Rational normalize");
        den = checked_sub(0, den, "Rational normalize");
    }
    int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num_ = num;
    den_ = den;
}

Rational operator+(const Rational& a, const Rational& b) {
    // Reduce by gcd of denominators first so intermediates stay small.
    int128 g = gcd128(a.den_, b.den_);
    int128 bd = b.den_ / g;
    int128 lhs = checked_mul(a.num_, bd, "Rational add");
    int128 rhs = checked_mul(b.num_, a.den_ / g, "Rational add");
    return Rational(checked_add(lhs, rhs, "Rational add"), checked_mul(a.den_, bd, "Rational add"));
}

Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
}

Rational operator*(const Rational& a, const Rational& b) {
    int128 g1 = gcd128(a.num_, b.den_);
    int128 g2 = gcd128(b.num_, a.den_);
    return Rational(checked_mul(a.num_ / g1, b.num_ / g2, "Rational mul"),
                    checked_mul(a.den_ / g2, b.den_ / g1, "Rational mul"));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return a * Rational(b.den_, b.num_);
}

Rational Rational::operator-() const {
    Rational out;
    out.num_ = checked_sub(0, num_, "Rational negate");
    out.den_ = den_;
    return out;
}

namespace {

// Compare positive fractions p1/q1 and p2/q2 by the continued-fraction walk;
// never needs integers wider than the operands.
std::strong_ordering compare_positive(uint128 p1, uint128 q1, uint128 p2, uint128 q2) {
    bool flipped = false;
    for (;;) {
        uint128 a1 = p1 / q1, r1 = p1 % q1;
        uint128 a2 = p2 / q2, r2 = p2 % q2;
        if (a1 != a2) {
            auto ord = a1 < a2 ? std::strong_ordering::less : std::strong_ordering::greater;
            return flipped ? (ord == std::strong_ordering::less ? std::strong_ordering::greater
                                                                : std::strong_ordering::less)
                           : ord;
        }
        if (r1 == 0 && r2 == 0) return std::strong_ordering::equal;
        if (r1 == 0) return flipped ? std::strong_ordering::greater : std::strong_ordering::less;
        if (r2 == 0) return flipped ? std::strong_ordering::less : std::strong_ordering::greater;
        p1 = q1;
        q1 = r1;
        p2 = q2;
        q2 = r2;
        flipped = !flipped;
    }
}

}  // namespace

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    int sa = sign(), sb = o.sign();
    if (sa != sb) return sa <=> sb;
    if (sa == 0) return std::strong_ordering::equal;
    uint128 p1 = num_ < 0 ? -uint128(num_) : uint128(num_);
    uint128 p2 = o.num_ < 0 ? -uint128(o.num_) : uint128(o.num_);
    auto ord = compare_positive(p1, uint128(den_), p2, uint128(o.den_));
    if (sa < 0 && ord != std::strong_ordering::equal)
        return ord == std::strong_ordering::less ? std::strong_ordering::greater : std::strong_ordering::less;
    return ord;
}

std::string Rational::to_string() const {
    if (den_ == 1) return menon::to_string(num_);
    return menon::to_string(num_) + "/" + menon::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int128(text));
    int128 num = parse_int128(text.substr(0, slash));
    int128 den = parse_int128(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("Rational::parse: zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& out, const Rational& value) {
    return out << value.to_string();
}

}  // namespace menon
