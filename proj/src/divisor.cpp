#include "qrsort/divisor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qrsort/error.hpp"

namespace qrsort {

void DivisorStrategy::validate() const {
    if (kind == DivisorKind::fixed && fixed_d == 0)
        throw Error(Errc::invalid_divisor, "fixed divisor must be at least 1");
}

std::uint64_t isqrt(std::uint64_t x) noexcept {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
    // Correct the floating-point estimate in both directions.
    while (r > 0 && (r > x / r)) --r;
    while ((r + 1) <= x / (r + 1)) ++r;
    return r;
}

std::uint64_t select_divisor(std::uint64_t m, DivisorStrategy strategy) {
    if (m < 1) throw Error(Errc::invalid_range, "range m must be at least 1");
    strategy.validate();
    switch (strategy.kind) {
    case DivisorKind::sqrt_range: return std::max<std::uint64_t>(1, isqrt(m));
    case DivisorKind::bypass_quotient: return m + 1;
    case DivisorKind::power_of_two: {
        const long long c = std::llround(0.5 * std::log2(static_cast<double>(m)));
        return std::uint64_t{1} << std::max(0LL, c);
    }
    case DivisorKind::fixed: return strategy.fixed_d;
    }
    return 1;
}

QrKeyMode mode_for(DivisorStrategy strategy, std::uint64_t d) {
    if (strategy.kind == DivisorKind::power_of_two && std::has_single_bit(d))
        return QrKeyMode::bitwise(static_cast<unsigned>(std::countr_zero(d)));
    return QrKeyMode::general();
}

std::uint64_t pass_cost(std::uint64_t m, std::uint64_t d) {
    if (m < 1) throw Error(Errc::invalid_range, "range m must be at least 1");
    if (d < 1) throw Error(Errc::invalid_divisor, "divisor must be positive");
    return d + (m - 1) / d + 1;
}

} // namespace qrsort
