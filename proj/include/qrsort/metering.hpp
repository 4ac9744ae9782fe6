#pragma once

// Computational-unit (CU) cost model.
//
// Cost contract shared by every instrumented sort in this library:
//   - each read or write of an element, key, counting bin or auxiliary slot
//     is one array access;
//   - each element/element or element/key comparison is one comparison
//     (min/max scans included);
//   - each integer division, modulo, shift or AND is counted in its own
//     category;
//   - index arithmetic and loop counters are free.
// Division and modulo weigh 15 units, everything else 1.

#include <cstdint>
#include <string>

namespace qrsort {

enum class OpCategory { access, comparison, division, modulo, bitwise };

struct CostWeights {
    std::uint64_t access = 1;
    std::uint64_t comparison = 1;
    std::uint64_t bitwise = 1;
    std::uint64_t division = 15;
    std::uint64_t modulo = 15;

    /// Throws Errc::invalid_argument if any weight is zero.
    void validate() const;
};

struct CostLedger {
    std::uint64_t array_accesses = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t divisions = 0;
    std::uint64_t modulos = 0;
    std::uint64_t bitwise_ops = 0;

    // Structural counters, not weighted: how many counting-sort passes ran
    // and how many bins they allocated in total.
    std::uint64_t counting_passes = 0;
    std::uint64_t counting_bins = 0;

    void record(OpCategory category, std::uint64_t count) noexcept {
        switch (category) {
        case OpCategory::access: array_accesses += count; break;
        case OpCategory::comparison: comparisons += count; break;
        case OpCategory::division: divisions += count; break;
        case OpCategory::modulo: modulos += count; break;
        case OpCategory::bitwise: bitwise_ops += count; break;
        }
    }

    friend bool operator==(const CostLedger&, const CostLedger&) = default;
};

inline void record(CostLedger& ledger, OpCategory category, std::uint64_t count) noexcept {
    ledger.record(category, count);
}

std::uint64_t total_units(const CostLedger& ledger, const CostWeights& weights = {});

/// "accesses,comparisons,divisions,modulos,bitwise,total" on one line.
std::string to_csv_line(const CostLedger& ledger);

} // namespace qrsort
