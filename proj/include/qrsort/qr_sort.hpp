#pragma once

// QR Sort: stable integer sort in two counting passes, first by remainder
// keys, then by quotient keys of (s_i - min) divided by d. When
// floor((max - min) / d) == 0 every quotient key is zero and only the
// remainder pass runs.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qrsort/counting_key_sort.hpp"
#include "qrsort/divisor.hpp"
#include "qrsort/element_seq.hpp"
#include "qrsort/keys.hpp"
#include "qrsort/metering.hpp"

namespace qrsort {

namespace detail {

// Sorts `a` in place given its already-scanned extents. The quotient keys are
// computed from the auxiliary buffer against the cached min(A), which equals
// min(B) because B is a permutation of A.
template <class T, class Proj>
void qr_sort_with_extents(std::span<T> a, const Extents& ext, std::uint64_t d,
                          QrKeyMode mode, CostLedger& ledger, Proj proj) {
    validate_key_mode(d, mode, ext);
    const std::size_t n = a.size();
    const Element base = key_base(mode, ext);

    const std::uint64_t max_quot = max_quotient(d, mode, ext);
    if (mode.kind == KeyMode::bitwise)
        ledger.bitwise_ops += 1;
    else
        ledger.divisions += 1;

    std::vector<T> b(n);
    std::vector<std::uint64_t> counts_r = make_counts(d);
    std::vector<std::uint64_t> keys(n);
    fill_remainder_keys(std::span<const T>(a), std::span(keys), base, d, mode, ledger, proj);

    if (max_quot == 0) {
        counting_key_sort(a, std::span(b), std::span(counts_r),
                          std::span<const std::uint64_t>(keys), true, ledger);
        return;
    }

    counting_key_sort(a, std::span(b), std::span(counts_r),
                      std::span<const std::uint64_t>(keys), false, ledger);
    counts_r = {};

    std::vector<std::uint64_t> counts_q = make_counts(max_quot + 1);
    fill_quotient_keys(std::span<const T>(b), std::span(keys), base, d, mode, ledger, proj);
    counting_key_sort(std::span(b), a, std::span(counts_q),
                      std::span<const std::uint64_t>(keys), false, ledger);
}

} // namespace detail

/// QR Sort of `a` in place with divisor d. Inputs of length 0 or 1 return
/// without touching the ledger.
template <class T, class Proj = std::identity>
void qr_sort_inplace(std::span<T> a, std::uint64_t d, QrKeyMode mode, CostLedger& ledger,
                     Proj proj = {}) {
    if (d == 0) throw Error(Errc::invalid_divisor, "divisor must be positive");
    if (a.size() <= 1) {
        if (mode.kind == KeyMode::bitwise) validate_key_mode(d, mode, Extents{});
        return;
    }
    const Extents ext = scan_extents(std::span<const T>(a), ledger, proj);
    check_range(ext);
    detail::qr_sort_with_extents(a, ext, d, mode, ledger, proj);
}

/// QR Sort with the divisor picked from the observed range by `strategy`.
template <class T, class Proj = std::identity>
std::uint64_t qr_sort_auto_inplace(std::span<T> a, DivisorStrategy strategy, CostLedger& ledger,
                                   Proj proj = {}) {
    strategy.validate();
    if (a.size() <= 1) return 0;
    const Extents ext = scan_extents(std::span<const T>(a), ledger, proj);
    check_range(ext);
    const std::uint64_t d = select_divisor(ext.range(), strategy);
    detail::qr_sort_with_extents(a, ext, d, mode_for(strategy, d), ledger, proj);
    return d;
}

ElementSeq qr_sort(const ElementSeq& a, std::uint64_t d, QrKeyMode mode, CostLedger& ledger);
ElementSeq qr_sort_auto(const ElementSeq& a, DivisorStrategy strategy, CostLedger& ledger);

} // namespace qrsort
