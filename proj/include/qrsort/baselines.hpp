#pragma once

// Reference sorts, metered under the same cost contract as QR Sort so their
// computational units are directly comparable. All sort in place.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qrsort/counting_key_sort.hpp"
#include "qrsort/element_seq.hpp"
#include "qrsort/metering.hpp"

namespace qrsort {

enum class AlgorithmId { merge, quick, counting, radix, qr };

inline constexpr AlgorithmId kAllAlgorithms[] = {
    AlgorithmId::merge, AlgorithmId::quick, AlgorithmId::counting, AlgorithmId::radix,
    AlgorithmId::qr};

std::string_view to_string(AlgorithmId id) noexcept;
std::optional<AlgorithmId> parse_algorithm(std::string_view name) noexcept;

/// Default memory guard for counting_sort_value: 2^28 bins.
inline constexpr std::uint64_t kDefaultBinCap = std::uint64_t{1} << 28;

namespace detail {

template <class T, class Proj>
void merge_pass(std::span<T> a, std::span<T> aux, std::size_t lo, std::size_t mid,
                std::size_t hi, CostLedger& ledger, Proj& proj) {
    for (std::size_t k = lo; k < hi; ++k)
        aux[k] = a[k];
    ledger.array_accesses += 2 * (hi - lo);

    std::size_t i = lo, j = mid;
    for (std::size_t k = lo; k < hi; ++k) {
        if (i >= mid) {
            a[k] = aux[j++];
            ledger.array_accesses += 2;
        } else if (j >= hi) {
            a[k] = aux[i++];
            ledger.array_accesses += 2;
        } else {
            ledger.array_accesses += 3;
            ledger.comparisons += 1;
            // Ties go left, which is what keeps the sort stable.
            if (std::invoke(proj, aux[j]) < std::invoke(proj, aux[i]))
                a[k] = aux[j++];
            else
                a[k] = aux[i++];
        }
    }
}

template <class T, class Proj>
void merge_sort_range(std::span<T> a, std::span<T> aux, std::size_t lo, std::size_t hi,
                      CostLedger& ledger, Proj& proj) {
    if (hi - lo < 2) return;
    const std::size_t mid = lo + (hi - lo) / 2;
    merge_sort_range(a, aux, lo, mid, ledger, proj);
    merge_sort_range(a, aux, mid, hi, ledger, proj);
    merge_pass(a, aux, lo, mid, hi, ledger, proj);
}

template <class T>
void metered_swap(std::span<T> a, std::ptrdiff_t i, std::ptrdiff_t j, CostLedger& ledger) {
    using std::swap;
    swap(a[i], a[j]);
    ledger.array_accesses += 4;
}

// a[x] < a[y], metered as two reads and one comparison.
template <class T, class Proj>
bool metered_less(std::span<T> a, std::ptrdiff_t x, std::ptrdiff_t y, CostLedger& ledger,
                  Proj& proj) {
    ledger.array_accesses += 2;
    ledger.comparisons += 1;
    return std::invoke(proj, a[x]) < std::invoke(proj, a[y]);
}

} // namespace detail

/// Top-down merge sort with one auxiliary buffer. Stable.
template <class T, class Proj = std::identity>
void merge_sort(std::span<T> a, CostLedger& ledger, Proj proj = {}) {
    if (a.size() < 2) return;
    std::vector<T> aux(a.size());
    detail::merge_sort_range(a, std::span(aux), 0, a.size(), ledger, proj);
}

/// Quicksort: median-of-three pivot, Hoare two-way partition, recursion on
/// the smaller side. Not stable. Runs of equal keys split evenly, so an
/// all-equal input stays at n log n.
template <class T, class Proj = std::identity>
void quicksort(std::span<T> a, CostLedger& ledger, Proj proj = {}) {
    using Index = std::ptrdiff_t;
    auto sort_range = [&](auto& self, Index lo, Index hi) -> void {
        while (hi - lo >= 1) {
            const Index mid = lo + (hi - lo) / 2;
            if (detail::metered_less(a, mid, lo, ledger, proj)) detail::metered_swap(a, mid, lo, ledger);
            if (detail::metered_less(a, hi, lo, ledger, proj)) detail::metered_swap(a, hi, lo, ledger);
            if (detail::metered_less(a, hi, mid, ledger, proj)) detail::metered_swap(a, hi, mid, ledger);
            if (hi - lo <= 2) return; // three elements or fewer are now ordered

            const Element pivot = std::invoke(proj, a[mid]);
            ledger.array_accesses += 1;
            Index i = lo - 1;
            Index j = hi + 1;
            for (;;) {
                do {
                    ++i;
                    ledger.array_accesses += 1;
                    ledger.comparisons += 1;
                } while (std::invoke(proj, a[i]) < pivot);
                do {
                    --j;
                    ledger.array_accesses += 1;
                    ledger.comparisons += 1;
                } while (std::invoke(proj, a[j]) > pivot);
                if (i >= j) break;
                detail::metered_swap(a, i, j, ledger);
            }
            if (j - lo < hi - j) {
                self(self, lo, j);
                lo = j + 1;
            } else {
                self(self, j + 1, hi);
                hi = j;
            }
        }
    };
    if (a.size() < 2) return;
    sort_range(sort_range, 0, static_cast<Index>(a.size()) - 1);
}

/// Counting Sort on values: keys are s_i - min, one bin per value in range.
/// Throws Errc::range_exceeds_memory when m > bin_cap.
template <class T, class Proj = std::identity>
void counting_sort_value(std::span<T> a, CostLedger& ledger,
                         std::uint64_t bin_cap = kDefaultBinCap, Proj proj = {}) {
    if (a.size() < 2) return;
    const Extents ext = scan_extents(std::span<const T>(a), ledger, proj);
    check_range(ext);
    const std::uint64_t m = ext.range();
    if (m > bin_cap)
        throw Error(Errc::range_exceeds_memory,
                    "counting sort needs " + std::to_string(m) + " bins, cap is " +
                        std::to_string(bin_cap));

    const std::size_t n = a.size();
    std::vector<std::uint64_t> keys(n);
    for (std::size_t i = 0; i < n; ++i)
        keys[i] = key_offset(std::invoke(proj, a[i]), ext.min);
    ledger.array_accesses += 2 * n;

    std::vector<std::uint64_t> counts = make_counts(m);
    std::vector<T> b(n);
    counting_key_sort(a, std::span(b), std::span(counts),
                      std::span<const std::uint64_t>(keys), true, ledger);
}

/// Number of base-b digits of x (1 for x == 0).
constexpr std::uint64_t radix_pass_count(std::uint64_t x, std::uint64_t base) noexcept {
    std::uint64_t passes = 1;
    while (x >= base) {
        x /= base;
        ++passes;
    }
    return passes;
}

/// LSD radix sort in base `base` >= 2 over s_i - min. Every pass extracts
/// its digit with one division and one modulo per element. Stable.
template <class T, class Proj = std::identity>
void radix_sort_lsd(std::span<T> a, std::uint64_t base, CostLedger& ledger, Proj proj = {}) {
    if (base < 2) throw Error(Errc::invalid_argument, "radix base must be at least 2");
    if (a.size() < 2) return;
    const Extents ext = scan_extents(std::span<const T>(a), ledger, proj);
    check_range(ext);

    const std::uint64_t passes = radix_pass_count(ext.spread(), base);
    ledger.divisions += passes - 1;
    ledger.comparisons += passes;

    const std::size_t n = a.size();
    std::vector<T> aux(n);
    std::vector<std::uint64_t> keys(n);
    std::span<T> src = a;
    std::span<T> dst = std::span(aux);
    std::uint64_t place = 1;
    for (std::uint64_t p = 0; p < passes; ++p) {
        for (std::size_t i = 0; i < n; ++i)
            keys[i] = key_offset(std::invoke(proj, src[i]), ext.min) / place % base;
        ledger.array_accesses += 2 * n;
        ledger.divisions += n;
        ledger.modulos += n;

        std::vector<std::uint64_t> counts = make_counts(base);
        const bool last = p + 1 == passes;
        // An odd pass count leaves the result in aux; the last pass copies it home.
        counting_key_sort(src, dst, std::span(counts), std::span<const std::uint64_t>(keys),
                          last && passes % 2 == 1, ledger);
        std::swap(src, dst);
        if (!last) place *= base;
    }
}

} // namespace qrsort
