#include "menon/multifunc.hpp"

#include "menon/checked.hpp"
#include "menon/factor.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace menon {

namespace {

void validate_tuple(std::span<const std::int64_t> m, int arity, const char* context) {
    if (static_cast<int>(m.size()) != arity)
        throw std::invalid_argument(std::string(context) + ": expected " + std::to_string(arity) +
                                    " components, got " + std::to_string(m.size()));
    for (std::int64_t v : m)
        if (v < 1)
            throw std::invalid_argument(std::string(context) + ": components must be >= 1, got " +
                                        std::to_string(v));
}

// Walks all tuples with tuple[i] in [1, bounds[i]]; visit returns nothing.
template <typename Visit>
void for_each_tuple(std::span<const std::int64_t> bounds, Visit&& visit) {
    std::vector<std::int64_t> tuple(bounds.size(), 1);
    for (;;) {
        visit(std::span<const std::int64_t>(tuple));
        std::size_t i = 0;
        while (i < tuple.size()) {
            if (tuple[i] < bounds[i]) {
                ++tuple[i];
                break;
            }
            tuple[i] = 1;
            ++i;
        }
        if (i == tuple.size()) return;
    }
}

}  // namespace

MultiFunc product_func(std::vector<FuncSpec> funcs) {
    if (funcs.empty()) throw std::invalid_argument("product_func: empty function system");
    int arity = static_cast<int>(funcs.size());
    return MultiFunc{arity, [funcs = std::move(funcs), arity](std::span<const std::int64_t> m) {
                         validate_tuple(m, arity, "product_func");
                         Rational out(1);
                         for (std::size_t i = 0; i < m.size(); ++i) out *= funcs[i](m[i]);
                         return out;
                     }};
}

MultiFunc convolve(const MultiFunc& f, const MultiFunc& g) {
    if (f.arity != g.arity)
        throw std::invalid_argument("convolve: arity mismatch (" + std::to_string(f.arity) + " vs " +
                                    std::to_string(g.arity) + ")");
    int arity = f.arity;
    auto fe = f.eval;
    auto ge = g.eval;
    return MultiFunc{arity, [fe, ge, arity](std::span<const std::int64_t> m) {
                         validate_tuple(m, arity, "convolve");
                         std::vector<std::vector<std::int64_t>> divisor_lists;
                         divisor_lists.reserve(m.size());
                         for (std::int64_t v : m) divisor_lists.push_back(divisors(v));

                         Rational acc;
                         std::vector<std::size_t> pick(m.size(), 0);
                         std::vector<std::int64_t> d(m.size()), comp(m.size());
                         for (;;) {
                             for (std::size_t i = 0; i < m.size(); ++i) {
                                 d[i] = divisor_lists[i][pick[i]];
                                 comp[i] = m[i] / d[i];
                             }
                             acc += fe(d) * ge(comp);
                             std::size_t i = 0;
                             while (i < pick.size()) {
                                 if (++pick[i] < divisor_lists[i].size()) break;
                                 pick[i] = 0;
                                 ++i;
                             }
                             if (i == pick.size()) break;
                         }
                         return acc;
                     }};
}

std::vector<MultCounterexample> check_multiplicative(const MultiFunc& f, std::int64_t bound) {
    if (bound < 1) throw std::invalid_argument("check_multiplicative: bound must be >= 1");
    if (f.arity < 1) throw std::invalid_argument("check_multiplicative: arity must be >= 1");
    const std::size_t r = static_cast<std::size_t>(f.arity);
    std::vector<std::int64_t> bounds(r, bound);

    // Cache f on the base grid; products of tuples are evaluated on demand.
    std::vector<std::vector<std::int64_t>> grid;
    std::vector<Rational> values;
    for_each_tuple(bounds, [&](std::span<const std::int64_t> tuple) {
        grid.emplace_back(tuple.begin(), tuple.end());
        values.push_back(f.eval(tuple));
    });

    std::vector<MultCounterexample> violations;
    std::vector<std::int64_t> product(r);
    for (std::size_t a = 0; a < grid.size(); ++a) {
        int128 pa = 1;
        for (std::int64_t v : grid[a]) pa = checked_mul(pa, v, "check_multiplicative");
        for (std::size_t b = 0; b < grid.size(); ++b) {
            int128 pb = 1;
            for (std::int64_t v : grid[b]) pb = checked_mul(pb, v, "check_multiplicative");
            if (gcd128(pa, pb) != 1) continue;
            for (std::size_t i = 0; i < r; ++i) product[i] = grid[a][i] * grid[b][i];
            Rational lhs = f.eval(product);
            Rational rhs = values[a] * values[b];
            if (lhs != rhs) violations.push_back({grid[a], grid[b], lhs, rhs});
        }
    }
    return violations;
}

}  // namespace menon
