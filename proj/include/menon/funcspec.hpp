#pragma once

#include "menon/rational.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace menon {

// Finite value table: values[i] holds f(i + 1), complete for 1..bound.
struct FuncTable {
    std::vector<Rational> values;

    std::int64_t bound() const { return static_cast<std::int64_t>(values.size()); }
};

// One-variable arithmetic function: a named family or a finite table.
// Text forms: id, id^t, one, phi, tau, sigma_k, table:<path>.
class FuncSpec {
public:
    enum class Kind { id_pow, const_one, euler_phi, tau, sigma, table };

    static FuncSpec id_pow(int t);
    static FuncSpec const_one();
    static FuncSpec euler_phi();
    static FuncSpec tau();
    static FuncSpec sigma(int k);
    static FuncSpec table(std::shared_ptr<const FuncTable> data, std::string source);
    static FuncSpec parse(std::string_view text);

    Kind kind() const { return kind_; }
    int order() const { return order_; }

    // f(n); throws std::out_of_range past a table's bound.
    Rational operator()(std::int64_t n) const;

    std::string to_string() const;
    bool is_multiplicative() const { return kind_ != Kind::table; }

private:
    Kind kind_ = Kind::const_one;
    int order_ = 0;  // t for id_pow, k for sigma
    std::shared_ptr<const FuncTable> table_;
    std::string source_;
};

// Two whitespace-separated columns per line: n and an integer or p/q value.
// Every n in 1..max must be present exactly once.
std::shared_ptr<const FuncTable> load_func_table(const std::string& path);

// (mu * f)(d) = sum over e | d of mu(d/e) f(e).
Rational mu_star(const FuncSpec& f, std::int64_t d);

// Comma-separated FuncSpec list.
std::vector<FuncSpec> parse_func_list(std::string_view text);

}  // namespace menon
