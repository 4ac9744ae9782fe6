#pragma once

// Field-verification property suites behind `qrsort selftest`.

#include <cstdint>
#include <string>
#include <vector>

namespace qrsort {

struct PropertyReport {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t violations = 0;

    bool passed() const noexcept { return cases > 0 && violations == 0; }
};

/// Lemma (s_i < s_j and r_i >= r_j imply q_i < q_j), quotient-remainder
/// reconstruction, and bitwise / subtraction-free equivalence with the
/// general keys, each over `cases` random inputs.
std::vector<PropertyReport> run_selftest(std::uint64_t cases, std::uint64_t seed);

} // namespace qrsort
