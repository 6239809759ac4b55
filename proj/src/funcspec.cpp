#include "menon/funcspec.hpp"

#include "menon/arith.hpp"
#include "menon/checked.hpp"
#include "menon/poly.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace menon {

FuncSpec FuncSpec::id_pow(int t) {
    if (t < 0) throw std::invalid_argument("FuncSpec: id exponent must be >= 0, got " + std::to_string(t));
    FuncSpec out;
    out.kind_ = Kind::id_pow;
    out.order_ = t;
    return out;
}

FuncSpec FuncSpec::const_one() {
    return FuncSpec{};
}

FuncSpec FuncSpec::euler_phi() {
    FuncSpec out;
    out.kind_ = Kind::euler_phi;
    return out;
}

FuncSpec FuncSpec::tau() {
    FuncSpec out;
    out.kind_ = Kind::tau;
    return out;
}

FuncSpec FuncSpec::sigma(int k) {
    if (k < 0) throw std::invalid_argument("FuncSpec: sigma order must be >= 0, got " + std::to_string(k));
    FuncSpec out;
    out.kind_ = Kind::sigma;
    out.order_ = k;
    return out;
}

FuncSpec FuncSpec::table(std::shared_ptr<const FuncTable> data, std::string source) {
    if (!data || data->values.empty()) throw std::invalid_argument("FuncSpec: empty table");
    FuncSpec out;
    out.kind_ = Kind::table;
    out.table_ = std::move(data);
    out.source_ = std::move(source);
    return out;
}

FuncSpec FuncSpec::parse(std::string_view text) {
    if (text == "id") return id_pow(1);
    if (text == "one") return const_one();
    if (text == "phi") return euler_phi();
    if (text == "tau") return tau();
    if (text.starts_with("id^")) {
        int128 t = parse_int128(text.substr(3));
        if (t < 0 || t > 64) throw parse_error("id exponent out of range [0, 64]", 3);
        return id_pow(static_cast<int>(t));
    }
    if (text.starts_with("sigma_")) {
        int128 k = parse_int128(text.substr(6));
        if (k < 0 || k > 64) throw parse_error("sigma order out of range [0, 64]", 6);
        return sigma(static_cast<int>(k));
    }
    if (text.starts_with("table:")) {
        std::string path(text.substr(6));
        return table(load_func_table(path), path);
    }
    throw parse_error("unknown function '" + std::string(text) +
                          "' (expected id, id^t, one, phi, tau, sigma_k, table:<path>)",
                      0);
}

Rational FuncSpec::operator()(std::int64_t n) const {
    if (n < 1) throw std::invalid_argument("FuncSpec: argument must be >= 1, got " + std::to_string(n));
    switch (kind_) {
        case Kind::id_pow:
            return Rational(checked_pow(n, order_, "FuncSpec id^t"));
        case Kind::const_one:
            return Rational(1);
        case Kind::euler_phi:
            return Rational(menon::euler_phi(n));
        case Kind::tau:
            return Rational(menon::tau(n));
        case Kind::sigma:
            return Rational(menon::sigma(order_, n));
        case Kind::table:
            if (n > table_->bound())
                throw std::out_of_range("FuncSpec table '" + source_ + "': argument " + std::to_string(n) +
                                        " exceeds bound " + std::to_string(table_->bound()));
            return table_->values[static_cast<std::size_t>(n - 1)];
    }
    throw std::logic_error("FuncSpec: bad kind");
}

std::string FuncSpec::to_string() const {
    switch (kind_) {
        case Kind::id_pow:
            return order_ == 1 ? "id" : "id^" + std::to_string(order_);
        case Kind::const_one:
            return "one";
        case Kind::euler_phi:
            return "phi";
        case Kind::tau:
            return "tau";
        case Kind::sigma:
            return "sigma_" + std::to_string(order_);
        case Kind::table:
            return "table:" + source_;
    }
    throw std::logic_error("FuncSpec: bad kind");
}

std::shared_ptr<const FuncTable> load_func_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("table '" + path + "': cannot open file");
    std::map<std::int64_t, Rational> entries;
    std::string n_text, value_text;
    while (in >> n_text >> value_text) {
        int128 n = parse_int128(n_text);
        if (n < 1) throw std::invalid_argument("table '" + path + "': index " + n_text + " must be >= 1");
        auto [it, inserted] = entries.emplace(narrow_i64(n, "table index"), Rational::parse(value_text));
        if (!inserted) throw std::invalid_argument("table '" + path + "': duplicate index " + n_text);
    }
    if (!in.eof()) throw std::invalid_argument("table '" + path + "': trailing malformed entry");
    if (entries.empty()) throw std::invalid_argument("table '" + path + "': no entries");
    std::int64_t bound = entries.rbegin()->first;
    if (static_cast<std::int64_t>(entries.size()) != bound)
        throw std::invalid_argument("table '" + path + "': values must cover every n in 1.." +
                                    std::to_string(bound));
    auto table = std::make_shared<FuncTable>();
    table->values.reserve(entries.size());
    for (auto& [n, value] : entries) table->values.push_back(value);
    return table;
}

Rational mu_star(const FuncSpec& f, std::int64_t d) {
    if (d < 1) throw std::invalid_argument("mu_star: argument must be >= 1, got " + std::to_string(d));
    Rational acc;
    for (std::int64_t e : divisors(d)) {
        int mu = mobius(d / e);
        if (mu == 0) continue;
        Rational value = f(e);
        acc += mu > 0 ? value : -value;
    }
    return acc;
}

std::vector<FuncSpec> parse_func_list(std::string_view text) {
    std::vector<FuncSpec> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        std::string_view item =
            comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
        out.push_back(FuncSpec::parse(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace menon
