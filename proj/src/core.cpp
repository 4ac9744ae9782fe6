#include <limits>
#include <new>
#include <stdexcept>
#include <string>

#include "qrsort/baselines.hpp"
#include "qrsort/counting_key_sort.hpp"
#include "qrsort/element_seq.hpp"
#include "qrsort/error.hpp"
#include "qrsort/keys.hpp"
#include "qrsort/metering.hpp"
#include "qrsort/qr_sort.hpp"

namespace qrsort {

const char* to_string(Errc code) noexcept {
    switch (code) {
    case Errc::invalid_divisor: return "invalid divisor";
    case Errc::mode_mismatch: return "key mode mismatch";
    case Errc::key_out_of_range: return "key out of range";
    case Errc::range_overflow: return "range overflow";
    case Errc::invalid_range: return "invalid range";
    case Errc::range_exceeds_memory: return "range exceeds memory";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::correctness_fault: return "correctness fault";
    case Errc::io_error: return "I/O error";
    case Errc::parse_error: return "parse error";
    }
    return "unknown error";
}

void CostWeights::validate() const {
    if (access == 0 || comparison == 0 || bitwise == 0 || division == 0 || modulo == 0)
        throw Error(Errc::invalid_argument, "cost weights must all be at least 1");
}

std::uint64_t total_units(const CostLedger& ledger, const CostWeights& weights) {
    return ledger.array_accesses * weights.access + ledger.comparisons * weights.comparison +
           ledger.bitwise_ops * weights.bitwise + ledger.divisions * weights.division +
           ledger.modulos * weights.modulo;
}

std::string to_csv_line(const CostLedger& ledger) {
    return std::to_string(ledger.array_accesses) + ',' + std::to_string(ledger.comparisons) +
           ',' + std::to_string(ledger.divisions) + ',' + std::to_string(ledger.modulos) + ',' +
           std::to_string(ledger.bitwise_ops) + ',' + std::to_string(total_units(ledger));
}

void check_range(const Extents& ext) {
    // m - 1 = max - min must stay below INT64_MAX so that m itself fits.
    if (ext.spread() >= static_cast<std::uint64_t>(std::numeric_limits<Element>::max()))
        throw Error(Errc::range_overflow,
                    "value range " + std::to_string(ext.min) + ".." + std::to_string(ext.max) +
                        " overflows 64-bit signed arithmetic");
}

ElementSeq::ElementSeq(std::vector<Element> items) : items_(std::move(items)) {
    if (items_.empty()) return;
    Extents ext{items_[0], items_[0]};
    for (Element v : items_) {
        if (v < ext.min) ext.min = v;
        if (v > ext.max) ext.max = v;
    }
    check_range(ext);
    extents_ = ext;
}

void validate_key_mode(std::uint64_t d, QrKeyMode mode, const Extents& ext) {
    if (d == 0) throw Error(Errc::invalid_divisor, "divisor must be positive");
    switch (mode.kind) {
    case KeyMode::general: break;
    case KeyMode::bitwise:
        if (mode.shift >= 64 || d != (std::uint64_t{1} << mode.shift))
            throw Error(Errc::mode_mismatch, "bitwise keys need d = 2^" +
                                                 std::to_string(mode.shift) + ", got d = " +
                                                 std::to_string(d));
        break;
    case KeyMode::subtraction_free:
        if (ext.min < 0)
            throw Error(Errc::mode_mismatch,
                        "subtraction-free keys need non-negative input, min is " +
                            std::to_string(ext.min));
        break;
    }
}

std::vector<std::uint64_t> make_counts(std::uint64_t bins) {
    try {
        if (bins > std::vector<std::uint64_t>().max_size()) throw std::length_error("bins");
        return std::vector<std::uint64_t>(static_cast<std::size_t>(bins));
    } catch (const std::length_error&) {
    } catch (const std::bad_alloc&) {
    }
    throw Error(Errc::range_exceeds_memory,
                "cannot allocate " + std::to_string(bins) + " counting bins");
}

ElementSeq qr_sort(const ElementSeq& a, std::uint64_t d, QrKeyMode mode, CostLedger& ledger) {
    std::vector<Element> out = a.items();
    qr_sort_inplace(std::span(out), d, mode, ledger);
    return ElementSeq(std::move(out));
}

ElementSeq qr_sort_auto(const ElementSeq& a, DivisorStrategy strategy, CostLedger& ledger) {
    std::vector<Element> out = a.items();
    qr_sort_auto_inplace(std::span(out), strategy, ledger);
    return ElementSeq(std::move(out));
}

std::string_view to_string(AlgorithmId id) noexcept {
    switch (id) {
    case AlgorithmId::merge: return "merge";
    case AlgorithmId::quick: return "quick";
    case AlgorithmId::counting: return "counting";
    case AlgorithmId::radix: return "radix";
    case AlgorithmId::qr: return "qr";
    }
    return "?";
}

std::optional<AlgorithmId> parse_algorithm(std::string_view name) noexcept {
    for (AlgorithmId id : kAllAlgorithms)
        if (to_string(id) == name) return id;
    return std::nullopt;
}

} // namespace qrsort
