#pragma once

// Experiment pipeline: evenly spaced ascending array per length, then
// trial_count rounds of Fisher-Yates shuffle + sort with every algorithm,
// recording the cost ledger of each sort.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qrsort/baselines.hpp"
#include "qrsort/divisor.hpp"
#include "qrsort/element_seq.hpp"
#include "qrsort/metering.hpp"
#include "qrsort/prng.hpp"

namespace qrsort {

struct RadixBaseRule {
    bool equals_n = true;
    std::uint64_t fixed_base = 0; // used when !equals_n

    static constexpr RadixBaseRule base_equals_n() noexcept { return {true, 0}; }
    static constexpr RadixBaseRule fixed(std::uint64_t b) noexcept { return {false, b}; }

    std::uint64_t base_for(std::uint64_t n) const noexcept {
        return equals_n ? (n < 2 ? 2 : n) : fixed_base;
    }
};

struct ExperimentConfig {
    std::uint64_t min_length = 10'000;
    std::uint64_t max_length = 1'000'000;
    std::uint64_t length_inc = 10'000;
    Element min_value = 0;
    Element max_value = 50'000;
    std::uint64_t trial_count = 10;
    std::uint64_t seed = 1;
    std::vector<AlgorithmId> algorithms{std::begin(kAllAlgorithms), std::end(kAllAlgorithms)};
    DivisorStrategy divisor_strategy = DivisorStrategy::sqrt_range();
    RadixBaseRule radix_base = RadixBaseRule::base_equals_n();
    std::uint64_t bin_cap = kDefaultBinCap;
    unsigned jobs = 1;
    bool measure_wall_time = false; // off keeps raw output byte-reproducible

    /// Throws Errc::invalid_argument naming the first violated constraint.
    void validate() const;
    std::vector<std::uint64_t> lengths() const;
};

struct ResultRecord {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t trial = 0;
    AlgorithmId algorithm = AlgorithmId::qr;
    CostLedger cost; // weighted counters only; pass statistics are cleared
    std::uint64_t wall_ns = 0;

    friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

/// An algorithm that declined to run, e.g. counting sort past its bin cap.
struct SkipMarker {
    std::uint64_t n = 0;
    std::uint64_t trial = 0;
    AlgorithmId algorithm = AlgorithmId::counting;
    std::string reason;

    friend bool operator==(const SkipMarker&, const SkipMarker&) = default;
};

struct TrialResult {
    std::vector<ResultRecord> records;
    std::vector<SkipMarker> skips;
};

/// a[i] = min + floor(i * (max - min) / (n - 1)); [min_value] when n == 1.
ElementSeq generate_array(std::uint64_t n, Element min_value, Element max_value);

template <class T>
void fisher_yates_shuffle(std::span<T> a, Xoshiro256ss& rng) {
    for (std::size_t i = a.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.bounded(i));
        using std::swap;
        swap(a[i - 1], a[j]);
    }
}

ElementSeq fisher_yates_shuffle(ElementSeq a, Xoshiro256ss& rng);

/// Runs one algorithm over `a` in place, metering into `ledger`.
void run_algorithm(AlgorithmId id, std::span<Element> a, const ExperimentConfig& config,
                   CostLedger& ledger);

/// Sorts a private copy of `shuffled` with each algorithm and checks every
/// output against a reference sort. Throws Errc::correctness_fault on any
/// disagreement.
TrialResult run_trial(std::span<const Element> shuffled, std::uint64_t trial,
                      const ExperimentConfig& config);

/// Full sweep, ordered by (n, trial, algorithm). Identical for any `jobs`.
TrialResult run_sweep(const ExperimentConfig& config);

} // namespace qrsort
