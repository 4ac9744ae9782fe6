#pragma once

// Stable counting sort driven by precomputed keys. This is the subroutine
// both QR Sort passes, the value Counting Sort baseline and every LSD radix
// pass are built on.
//
// Metering per call, n elements and B = counts.size() bins:
//   tally        3n   (read key, read bin, write bin)
//   prefix sum   3(B - 1)
//   placement    6n   (read key, read bin, read source, write dest, read+write bin)
//   copy-back    2n   (only when copy_back)

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qrsort/error.hpp"
#include "qrsort/keys.hpp"
#include "qrsort/metering.hpp"

namespace qrsort {

/// Sorts `source` into `dest` by `keys`, stably. `counts` must be zeroed and
/// sized to the key bound; it is consumed. With copy_back the result is also
/// written back into `source`.
template <class T>
void counting_key_sort(std::span<T> source, std::span<T> dest,
                       std::span<std::uint64_t> counts,
                       std::span<const std::uint64_t> keys,
                       bool copy_back, CostLedger& ledger) {
    const std::size_t n = source.size();
    if (dest.size() != n || keys.size() != n)
        throw Error(Errc::invalid_argument, "counting_key_sort: source, dest and keys differ in length");
    const std::size_t bins = counts.size();

    ledger.counting_passes += 1;
    ledger.counting_bins += bins;

    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t k = keys[i];
        if (k >= bins)
            throw Error(Errc::key_out_of_range,
                        "counting_key_sort: key " + std::to_string(k) + " at index " +
                            std::to_string(i) + " is outside [0, " + std::to_string(bins) + ")");
        ++counts[k];
    }
    ledger.array_accesses += 3 * n;

    for (std::size_t k = 1; k < bins; ++k)
        counts[k] += counts[k - 1];
    if (bins > 1) ledger.array_accesses += 3 * (bins - 1);

    for (std::size_t i = n; i-- > 0;) {
        const std::uint64_t k = keys[i];
        dest[counts[k] - 1] = source[i];
        --counts[k];
    }
    ledger.array_accesses += 6 * n;

    if (copy_back) {
        for (std::size_t i = 0; i < n; ++i)
            source[i] = dest[i];
        ledger.array_accesses += 2 * n;
    }
}

/// Same, allocating the counting array from keys.key_bound.
template <class T>
void counting_key_sort(std::span<T> source, std::span<T> dest, const KeySeq& keys,
                       bool copy_back, CostLedger& ledger) {
    std::vector<std::uint64_t> counts(keys.key_bound);
    counting_key_sort(source, dest, std::span(counts), std::span<const std::uint64_t>(keys.keys),
                      copy_back, ledger);
}

/// Zeroed counting array of `bins` entries; allocation failure is reported as
/// Errc::range_exceeds_memory.
std::vector<std::uint64_t> make_counts(std::uint64_t bins);

} // namespace qrsort
