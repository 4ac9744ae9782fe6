#pragma once

#include <cstdint>

#include "qrsort/keys.hpp"

namespace qrsort {

enum class DivisorKind {
    sqrt_range,      // d = max(1, floor(sqrt(m))): fewest counting bins
    bypass_quotient, // d = m + 1: single remainder pass
    power_of_two,    // d = 2^round(log2(m) / 2): bitwise key arithmetic
    fixed,
};

struct DivisorStrategy {
    DivisorKind kind = DivisorKind::sqrt_range;
    std::uint64_t fixed_d = 0;

    static constexpr DivisorStrategy sqrt_range() noexcept { return {DivisorKind::sqrt_range, 0}; }
    static constexpr DivisorStrategy bypass_quotient() noexcept {
        return {DivisorKind::bypass_quotient, 0};
    }
    static constexpr DivisorStrategy power_of_two() noexcept { return {DivisorKind::power_of_two, 0}; }
    static constexpr DivisorStrategy fixed(std::uint64_t d) noexcept { return {DivisorKind::fixed, d}; }

    /// Throws Errc::invalid_divisor for FIXED with d == 0.
    void validate() const;

    friend bool operator==(const DivisorStrategy&, const DivisorStrategy&) = default;
};

/// Divisor for a value range m >= 1 (throws Errc::invalid_range otherwise).
std::uint64_t select_divisor(std::uint64_t m, DivisorStrategy strategy);

/// Key mode a strategy implies for divisor d: bitwise for POWER_OF_TWO,
/// general for everything else.
QrKeyMode mode_for(DivisorStrategy strategy, std::uint64_t d);

/// Total counting bins both QR passes allocate: d + floor((m - 1) / d) + 1.
std::uint64_t pass_cost(std::uint64_t m, std::uint64_t d);

/// floor(sqrt(x)) exactly, for any 64-bit x.
std::uint64_t isqrt(std::uint64_t x) noexcept;

} // namespace qrsort
