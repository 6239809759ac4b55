#include "menon/groups.hpp"

#include "menon/arith.hpp"
#include "menon/checked.hpp"
#include "menon/factor.hpp"
#include "menon/sums.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace menon {

namespace {

std::int64_t validated_order(const DirectProductSpec& spec, const char* context) {
    if (spec.orders.empty()) throw std::invalid_argument(std::string(context) + ": empty order list");
    int128 q = 1;
    for (std::int64_t m : spec.orders) {
        if (m < 1)
            throw std::invalid_argument(std::string(context) + ": orders must be >= 1, got " + std::to_string(m));
        q = checked_mul(q, m, context);
    }
    return narrow_i64(q, context);
}

}  // namespace

std::int64_t cyclic_count_formula(const DirectProductSpec& spec) {
    validated_order(spec, "cyclic_count_formula");
    const std::size_t r = spec.orders.size();
    std::vector<std::vector<std::int64_t>> lists(r);
    std::int64_t grid = 1;
    for (std::size_t i = 0; i < r; ++i) {
        lists[i] = divisors(spec.orders[i]);
        grid = narrow_i64(checked_mul(grid, std::int64_t(lists[i].size()), "cyclic_count_formula"),
                          "cyclic_count_formula");
    }
    check_budget(grid, budget_limit(default_direct_sum_budget), "cyclic_count_formula");

    int128 total = 0;
    std::vector<std::size_t> pick(r, 0);
    for (;;) {
        int128 phis = 1;
        std::int64_t tuple_lcm = 1;
        for (std::size_t i = 0; i < r; ++i) {
            std::int64_t d = lists[i][pick[i]];
            phis = checked_mul(phis, euler_phi(d), "cyclic_count_formula");
            tuple_lcm = lcm_i64(tuple_lcm, d);
        }
        int128 den = euler_phi(tuple_lcm);
        if (phis % den != 0)
            throw std::logic_error("cyclic_count_formula: non-integer grid term");
        total = checked_add(total, phis / den, "cyclic_count_formula");
        std::size_t i = 0;
        while (i < r) {
            if (++pick[i] < lists[i].size()) break;
            pick[i] = 0;
            ++i;
        }
        if (i == r) break;
    }
    return narrow_i64(total, "cyclic_count_formula");
}

std::int64_t cyclic_count_burnside(const DirectProductSpec& spec) {
    std::int64_t q = validated_order(spec, "cyclic_count_burnside");
    check_budget(q, budget_limit(default_direct_sum_budget), "cyclic_count_burnside");
    int128 fixed = 0;
    for (std::int64_t k = 1; k <= q; ++k) {
        if (std::gcd(k, q) != 1) continue;
        int128 term = 1;
        for (std::int64_t m : spec.orders) term = checked_mul(term, std::gcd(k - 1, m), "cyclic_count_burnside");
        fixed = checked_add(fixed, term, "cyclic_count_burnside");
    }
    std::int64_t units = euler_phi(q);
    if (fixed % units != 0)
        throw std::logic_error("cyclic_count_burnside: fixed-point sum " + to_string(fixed) +
                               " is not divisible by phi(" + std::to_string(q) + ")");
    return narrow_i64(fixed / units, "cyclic_count_burnside");
}

std::int64_t cyclic_count_enumerate(const DirectProductSpec& spec) {
    std::int64_t q = validated_order(spec, "cyclic_count_enumerate");
    check_budget(q, budget_limit(default_enumeration_budget), "cyclic_count_enumerate");
    const std::size_t r = spec.orders.size();

    auto encode = [&](const std::vector<std::int64_t>& element) {
        std::uint64_t index = 0;
        for (std::size_t i = 0; i < r; ++i)
            index = index * static_cast<std::uint64_t>(spec.orders[i]) + static_cast<std::uint64_t>(element[i]);
        return index;
    };
    auto decode = [&](std::uint64_t index) {
        std::vector<std::int64_t> element(r);
        for (std::size_t i = r; i-- > 0;) {
            element[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(spec.orders[i]));
            index /= static_cast<std::uint64_t>(spec.orders[i]);
        }
        return element;
    };
    auto element_order = [&](const std::vector<std::int64_t>& element) {
        std::int64_t order = 1;
        for (std::size_t i = 0; i < r; ++i)
            order = lcm_i64(order, spec.orders[i] / std::gcd(spec.orders[i], element[i]));
        return order;
    };

    // Every element generates exactly one cyclic subgroup; once a subgroup is
    // materialized, all its generators are marked consumed, so each distinct
    // subgroup is built exactly once.
    std::vector<bool> consumed(static_cast<std::size_t>(q), false);
    std::set<std::vector<std::uint64_t>> subgroups;
    for (std::int64_t start = 0; start < q; ++start) {
        if (consumed[static_cast<std::size_t>(start)]) continue;
        std::vector<std::int64_t> generator = decode(static_cast<std::uint64_t>(start));
        std::int64_t order = element_order(generator);

        std::vector<std::uint64_t> members;
        members.reserve(static_cast<std::size_t>(order));
        std::vector<std::int64_t> current(r, 0);
        for (std::int64_t step = 0; step < order; ++step) {
            members.push_back(encode(current));
            std::int64_t current_order = element_order(current);
            if (current_order == order) consumed[static_cast<std::size_t>(encode(current))] = true;
            for (std::size_t i = 0; i < r; ++i) {
                current[i] += generator[i];
                if (current[i] >= spec.orders[i]) current[i] -= spec.orders[i];
            }
        }
        std::sort(members.begin(), members.end());
        if (!subgroups.insert(std::move(members)).second)
            throw std::logic_error("cyclic_count_enumerate: generator marking failed to dedupe");
    }
    return static_cast<std::int64_t>(subgroups.size());
}

std::int64_t cyclic_count_prime_power_pair(std::int64_t p, int u, int v) {
    if (!is_prime(p)) throw std::invalid_argument("cyclic_count_prime_power_pair: p must be prime");
    if (v < 1 || u < v)
        throw std::invalid_argument("cyclic_count_prime_power_pair: requires u >= v >= 1; swap the arguments");
    int128 geometric = 0;
    int128 power = 1;
    for (int i = 0; i < v; ++i) {
        geometric = checked_add(geometric, power, "cyclic_count_prime_power_pair");
        power = checked_mul(power, p, "cyclic_count_prime_power_pair");
    }
    // power is now p^v
    int128 value = checked_add(checked_mul(2, geometric, "cyclic_count_prime_power_pair"),
                               checked_mul(u - v + 1, power, "cyclic_count_prime_power_pair"),
                               "cyclic_count_prime_power_pair");
    return narrow_i64(value, "cyclic_count_prime_power_pair");
}

}  // namespace menon
