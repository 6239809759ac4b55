#include "menon/poly.hpp"

#include "menon/checked.hpp"

#include <cctype>
#include <utility>

namespace menon {

namespace {

void trim_leading_zeros(std::vector<std::int64_t>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

void check_caps(const std::vector<std::int64_t>& coeffs, std::size_t at) {
    if (static_cast<int>(coeffs.size()) - 1 > IntPoly::max_degree)
        throw parse_error("degree exceeds " + std::to_string(IntPoly::max_degree), at);
    for (std::int64_t c : coeffs)
        if (c > IntPoly::max_coefficient || c < -IntPoly::max_coefficient)
            throw parse_error("coefficient magnitude exceeds 2^31", at);
}

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos == text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::int64_t integer(const char* what) {
        skip_ws();
        std::size_t start = pos;
        std::int64_t value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > IntPoly::max_coefficient)
                throw parse_error(std::string(what) + " exceeds 2^31", start);
            ++pos;
        }
        if (pos == start) throw parse_error(std::string("expected ") + what, pos);
        return value;
    }

    // factor := integer | 'x' ('^' integer)?
    std::vector<std::int64_t> factor() {
        skip_ws();
        if (pos < text.size() && text[pos] == 'x') {
            ++pos;
            std::int64_t exponent = 1;
            if (consume('^')) {
                skip_ws();
                if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
                    throw parse_error("exponent must be a plain nonnegative integer", pos);
                std::size_t at = pos;
                exponent = integer("exponent");
                if (exponent > IntPoly::max_degree)
                    throw parse_error("exponent exceeds " + std::to_string(IntPoly::max_degree), at);
            }
            std::vector<std::int64_t> coeffs(static_cast<std::size_t>(exponent) + 1, 0);
            coeffs.back() = 1;
            return coeffs;
        }
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            return {integer("coefficient")};
        throw parse_error("expected a coefficient or x", pos);
    }

    // term := factor ('*' factor)*
    std::vector<std::int64_t> term() {
        std::vector<std::int64_t> product = factor();
        while (consume('*')) {
            std::size_t at = pos;
            std::vector<std::int64_t> next = factor();
            product = multiply(product, next, at);
        }
        return product;
    }

    std::vector<std::int64_t> multiply(const std::vector<std::int64_t>& a,
                                       const std::vector<std::int64_t>& b, std::size_t at) {
        if (a.empty() || b.empty()) return {};
        std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                out[i + j] = narrow_i64(
                    checked_add(out[i + j], checked_mul(a[i], b[j], "poly multiply"), "poly multiply"),
                    "poly multiply");
        trim_leading_zeros(out);
        check_caps(out, at);
        return out;
    }

    // expr := sign? term (('+'|'-') term)*
    std::vector<std::int64_t> expr() {
        std::vector<std::int64_t> total;
        int sign = 1;
        if (consume('-'))
            sign = -1;
        else
            consume('+');
        for (;;) {
            std::size_t at = pos;
            std::vector<std::int64_t> t = term();
            if (total.size() < t.size()) total.resize(t.size(), 0);
            for (std::size_t i = 0; i < t.size(); ++i)
                total[i] = narrow_i64(checked_add(total[i], sign * int128(t[i]), "poly add"), "poly add");
            trim_leading_zeros(total);
            check_caps(total, at);
            if (consume('+'))
                sign = 1;
            else if (consume('-'))
                sign = -1;
            else
                break;
        }
        return total;
    }
};

}  // namespace

IntPoly::IntPoly(std::vector<std::int64_t> ascending_coefficients) : coeffs_(std::move(ascending_coefficients)) {
    trim_leading_zeros(coeffs_);
    if (degree() > max_degree)
        throw std::invalid_argument("IntPoly: degree exceeds " + std::to_string(max_degree));
    for (std::int64_t c : coeffs_)
        if (c > max_coefficient || c < -max_coefficient)
            throw std::invalid_argument("IntPoly: coefficient magnitude exceeds 2^31");
}

IntPoly IntPoly::parse(std::string_view text) {
    Parser parser{text};
    std::vector<std::int64_t> coeffs = parser.expr();
    if (!parser.at_end()) throw parse_error("unexpected trailing input", parser.pos);
    IntPoly out;
    out.coeffs_ = std::move(coeffs);
    return out;
}

std::int64_t IntPoly::eval_mod(std::int64_t x, std::int64_t modulus) const {
    if (modulus < 1) throw std::invalid_argument("IntPoly::eval_mod: modulus must be >= 1");
    std::int64_t r = x % modulus;
    if (r < 0) r += modulus;
    int128 acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = (acc * r + coeffs_[i]) % modulus;
    }
    if (acc < 0) acc += modulus;
    return static_cast<std::int64_t>(acc);
}

std::string IntPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        std::int64_t c = coeffs_[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? '-' : '+';
        }
        std::uint64_t mag = c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
        bool with_coefficient = mag != 1 || d == 0;
        if (with_coefficient) out += std::to_string(mag);
        if (d > 0) {
            if (with_coefficient) out += '*';
            out += 'x';
            if (d > 1) {
                out += '^';
                out += std::to_string(d);
            }
        }
    }
    return out;
}

std::vector<IntPoly> parse_poly_list(std::string_view text) {
    std::vector<IntPoly> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        std::string_view item =
            comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
        out.push_back(IntPoly::parse(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace menon
