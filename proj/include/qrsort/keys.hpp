#pragma once

// Remainder and quotient keys for QR Sort.
//
//   r_i = (s_i - base) mod d        q_i = floor((s_i - base) / d)
//
// base is min(S), or 0 in subtraction-free mode. With d = 2^c the bitwise
// forms (s_i - base) & (2^c - 1) and (s_i - base) >> c are used instead.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qrsort/element_seq.hpp"
#include "qrsort/error.hpp"
#include "qrsort/metering.hpp"

namespace qrsort {

enum class KeyMode { general, subtraction_free, bitwise };

struct QrKeyMode {
    KeyMode kind = KeyMode::general;
    unsigned shift = 0; // bitwise only: d == 2^shift

    static constexpr QrKeyMode general() noexcept { return {KeyMode::general, 0}; }
    static constexpr QrKeyMode subtraction_free() noexcept {
        return {KeyMode::subtraction_free, 0};
    }
    static constexpr QrKeyMode bitwise(unsigned c) noexcept { return {KeyMode::bitwise, c}; }

    friend bool operator==(const QrKeyMode&, const QrKeyMode&) = default;
};

/// Keys aligned with an element sequence; every key is < key_bound.
struct KeySeq {
    std::vector<std::uint64_t> keys;
    std::uint64_t key_bound = 0;
};

/// Rejects d == 0, bitwise with d != 2^shift (shift < 64), subtraction-free with negative min.
void validate_key_mode(std::uint64_t d, QrKeyMode mode, const Extents& ext);

/// Value subtracted from every element before dividing.
inline Element key_base(QrKeyMode mode, const Extents& ext) noexcept {
    return mode.kind == KeyMode::subtraction_free ? Element{0} : ext.min;
}

inline std::uint64_t key_offset(Element v, Element base) noexcept {
    return static_cast<std::uint64_t>(v) - static_cast<std::uint64_t>(base);
}

/// Largest quotient key for the given extents: floor((max - base) / d).
inline std::uint64_t max_quotient(std::uint64_t d, QrKeyMode mode, const Extents& ext) noexcept {
    const std::uint64_t top = key_offset(ext.max, key_base(mode, ext));
    return mode.kind == KeyMode::bitwise ? top >> mode.shift : top / d;
}

namespace detail {

// Each fills `out` (same length as values) and meters one read, one write and
// one arithmetic op per element. Preconditions already validated by the caller.

template <class T, class Proj>
void fill_remainder_keys(std::span<const T> values, std::span<std::uint64_t> out,
                         Element base, std::uint64_t d, QrKeyMode mode,
                         CostLedger& ledger, Proj proj) {
    const std::size_t n = values.size();
    ledger.array_accesses += 2 * n;
    if (mode.kind == KeyMode::bitwise) {
        const std::uint64_t mask = d - 1;
        ledger.bitwise_ops += n;
        for (std::size_t i = 0; i < n; ++i)
            out[i] = key_offset(std::invoke(proj, values[i]), base) & mask;
    } else {
        ledger.modulos += n;
        for (std::size_t i = 0; i < n; ++i)
            out[i] = key_offset(std::invoke(proj, values[i]), base) % d;
    }
}

template <class T, class Proj>
void fill_quotient_keys(std::span<const T> values, std::span<std::uint64_t> out,
                        Element base, std::uint64_t d, QrKeyMode mode,
                        CostLedger& ledger, Proj proj) {
    const std::size_t n = values.size();
    ledger.array_accesses += 2 * n;
    if (mode.kind == KeyMode::bitwise) {
        ledger.bitwise_ops += n;
        for (std::size_t i = 0; i < n; ++i)
            out[i] = key_offset(std::invoke(proj, values[i]), base) >> mode.shift;
    } else {
        ledger.divisions += n;
        for (std::size_t i = 0; i < n; ++i)
            out[i] = key_offset(std::invoke(proj, values[i]), base) / d;
    }
}

} // namespace detail

/// Remainder keys with key_bound = d. Includes a metered min/max scan.
template <class T, class Proj = std::identity>
KeySeq compute_remainder_keys(std::span<const T> s, std::uint64_t d, QrKeyMode mode,
                              CostLedger& ledger, Proj proj = {}) {
    if (d == 0) throw Error(Errc::invalid_divisor, "divisor must be positive");
    KeySeq out{std::vector<std::uint64_t>(s.size()), d};
    if (s.empty()) {
        validate_key_mode(d, mode, Extents{});
        return out;
    }
    const Extents ext = scan_extents(s, ledger, proj);
    check_range(ext);
    validate_key_mode(d, mode, ext);
    detail::fill_remainder_keys(s, std::span(out.keys), key_base(mode, ext), d, mode, ledger, proj);
    return out;
}

/// Quotient keys with key_bound = max_quotient + 1. Includes a metered scan.
template <class T, class Proj = std::identity>
KeySeq compute_quotient_keys(std::span<const T> s, std::uint64_t d, QrKeyMode mode,
                             CostLedger& ledger, Proj proj = {}) {
    if (d == 0) throw Error(Errc::invalid_divisor, "divisor must be positive");
    KeySeq out{std::vector<std::uint64_t>(s.size()), 1};
    if (s.empty()) {
        validate_key_mode(d, mode, Extents{});
        return out;
    }
    const Extents ext = scan_extents(s, ledger, proj);
    check_range(ext);
    validate_key_mode(d, mode, ext);
    out.key_bound = max_quotient(d, mode, ext) + 1;
    detail::fill_quotient_keys(s, std::span(out.keys), key_base(mode, ext), d, mode, ledger, proj);
    return out;
}

inline KeySeq compute_remainder_keys(const ElementSeq& s, std::uint64_t d, QrKeyMode mode,
                                     CostLedger& ledger) {
    return compute_remainder_keys(s.view(), d, mode, ledger);
}

inline KeySeq compute_quotient_keys(const ElementSeq& s, std::uint64_t d, QrKeyMode mode,
                                    CostLedger& ledger) {
    return compute_quotient_keys(s.view(), d, mode, ledger);
}

} // namespace qrsort
