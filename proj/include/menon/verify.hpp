#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace menon::verify {

struct Options {
    std::int64_t limit = 0;          // 0 = suite default; see README for the per-suite meaning
    std::uint64_t seed = 20260809;   // randomized grids are reproducible by default
};

struct SuiteResult {
    std::string name;
    std::int64_t cases = 0;
    std::vector<std::string> failures;  // sorted for stable transcripts

    bool passed() const { return failures.empty(); }
};

// Divisor-formula vs direct-sum equivalence for the S and R sums on a
// randomized grid, M-independence of the R sum, integrality of the all-id
// R grid, and multiplicativity of both sums in the moduli.
SuiteResult run_theorems(const Options& options);

// Exhaustive sweeps of the named-identity catalog.
SuiteResult run_identities(const Options& options);

// Cyclic-subgroup counting: three-way agreement, the prime-power closed
// form, the two-factor gcd grid, permutation invariance, multiplicativity.
SuiteResult run_groups(const Options& options);

// Congruence machinery: solution-count multiplicativity against the
// single-pass oracle, unit-class cardinality, CRT behavior, and the linear
// eta closed form against brute force.
SuiteResult run_lemmas(const Options& options);

std::vector<SuiteResult> run_all(const Options& options);

}  // namespace menon::verify
