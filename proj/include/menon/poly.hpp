#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace menon {

// Syntax error in one of the text grammars; position is a 0-based character
// offset into the offending input.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Integer-coefficient polynomial in one variable, stored ascending:
// c0 + c1 x + ... + cd x^d with cd != 0 (empty list = zero polynomial).
// Degree is capped at 16 and |coefficients| at 2^31 so that Horner
// evaluation stays exact in 128 bits for any modulus below 2^31.
class IntPoly {
public:
    static constexpr int max_degree = 16;
    static constexpr std::int64_t max_coefficient = std::int64_t{1} << 31;

    IntPoly() = default;
    explicit IntPoly(std::vector<std::int64_t> ascending_coefficients);

    // Grammar: signed integer-coefficient expressions in x with + - * ^,
    // e.g. "x^2-1", "3*x-5", "x". Whitespace-insensitive.
    static IntPoly parse(std::string_view text);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const std::int64_t> coefficients() const { return coeffs_; }

    // g(x) mod modulus in [0, modulus); Horner with reduction at every step.
    std::int64_t eval_mod(std::int64_t x, std::int64_t modulus) const;

    // Canonical form, descending powers, reparses to the same polynomial.
    std::string to_string() const;

    bool operator==(const IntPoly&) const = default;

private:
    std::vector<std::int64_t> coeffs_;
};

struct PolySystem {
    std::vector<IntPoly> polys;

    bool operator==(const PolySystem&) const = default;
};

// Comma-separated polynomial list, one polynomial per item.
std::vector<IntPoly> parse_poly_list(std::string_view text);

}  // namespace menon
