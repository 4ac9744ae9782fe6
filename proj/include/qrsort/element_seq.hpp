#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qrsort/error.hpp"
#include "qrsort/metering.hpp"

namespace qrsort {

using Element = std::int64_t;

/// Smallest and largest value of a non-empty sequence, plus m = max - min + 1.
struct Extents {
    Element min = 0;
    Element max = 0;

    /// Normalised span max - min; fits in uint64 for any pair of int64s.
    std::uint64_t spread() const noexcept {
        return static_cast<std::uint64_t>(max) - static_cast<std::uint64_t>(min);
    }
    /// m. Only meaningful once checked_range() has accepted the extents.
    std::uint64_t range() const noexcept { return spread() + 1; }
};

/// Throws Errc::range_overflow when max - min + 1 exceeds INT64_MAX.
void check_range(const Extents& ext);

/// Sequence of 64-bit signed integers whose range m fits in int64.
class ElementSeq {
public:
    ElementSeq() = default;
    explicit ElementSeq(std::vector<Element> items);
    ElementSeq(std::initializer_list<Element> items)
        : ElementSeq(std::vector<Element>(items)) {}

    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }

    std::span<const Element> view() const noexcept { return items_; }
    const std::vector<Element>& items() const noexcept { return items_; }
    std::vector<Element> release() && noexcept { return std::move(items_); }

    /// nullopt for the empty sequence.
    std::optional<Extents> extents() const noexcept { return extents_; }

    friend bool operator==(const ElementSeq& a, const ElementSeq& b) {
        return a.items_ == b.items_;
    }

private:
    std::vector<Element> items_;
    std::optional<Extents> extents_;
};

/// Metered min/max scan: one access per element, two comparisons per element
/// after the first. Precondition: !values.empty().
template <class T, class Proj = std::identity>
Extents scan_extents(std::span<const T> values, CostLedger& ledger, Proj proj = {}) {
    Extents ext;
    ext.min = ext.max = static_cast<Element>(std::invoke(proj, values[0]));
    ledger.array_accesses += values.size();
    ledger.comparisons += 2 * (values.size() - 1);
    for (std::size_t i = 1; i < values.size(); ++i) {
        const Element v = std::invoke(proj, values[i]);
        if (v < ext.min) ext.min = v;
        if (v > ext.max) ext.max = v;
    }
    return ext;
}

} // namespace qrsort
