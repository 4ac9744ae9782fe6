#include "qrsort/harness.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <string>

#include "qrsort/qr_sort.hpp"

namespace qrsort {

namespace {

void require(bool ok, const char* constraint) {
    if (!ok) throw Error(Errc::invalid_argument, std::string("constraint violated: ") + constraint);
}

std::vector<AlgorithmId> canonical_algorithms(std::vector<AlgorithmId> algs) {
    std::sort(algs.begin(), algs.end());
    algs.erase(std::unique(algs.begin(), algs.end()), algs.end());
    return algs;
}

CostLedger weighted_only(CostLedger ledger) {
    ledger.counting_passes = 0;
    ledger.counting_bins = 0;
    return ledger;
}

TrialResult run_length(std::uint64_t n, const ExperimentConfig& config) {
    TrialResult out;
    std::vector<Element> a = generate_array(n, config.min_value, config.max_value).items();
    for (std::uint64_t t = 0; t < config.trial_count; ++t) {
        // Each trial reshuffles the previous trial's order with its own stream.
        Xoshiro256ss rng(trial_stream_seed(config.seed, n, t));
        fisher_yates_shuffle(std::span(a), rng);
        TrialResult trial = run_trial(a, t, config);
        out.records.insert(out.records.end(), trial.records.begin(), trial.records.end());
        out.skips.insert(out.skips.end(), trial.skips.begin(), trial.skips.end());
    }
    return out;
}

} // namespace

void ExperimentConfig::validate() const {
    require(min_length >= 1, "min_length >= 1");
    require(min_length <= max_length, "min_length <= max_length");
    require(length_inc >= 1, "length_inc >= 1");
    require(min_value <= max_value, "min_value <= max_value");
    require(trial_count >= 1, "trial_count >= 1");
    require(!algorithms.empty(), "at least one algorithm");
    require(bin_cap >= 1, "bin_cap >= 1");
    require(jobs >= 1, "jobs >= 1");
    require(radix_base.equals_n || radix_base.fixed_base >= 2, "radix base >= 2");
    divisor_strategy.validate();
    check_range(Extents{min_value, max_value});
}

std::vector<std::uint64_t> ExperimentConfig::lengths() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = min_length; n <= max_length; n += length_inc) {
        out.push_back(n);
        if (max_length - n < length_inc) break; // next step would pass max_length (or wrap)
    }
    return out;
}

ElementSeq generate_array(std::uint64_t n, Element min_value, Element max_value) {
    if (n < 1) throw Error(Errc::invalid_argument, "array length must be at least 1");
    if (min_value > max_value) throw Error(Errc::invalid_argument, "min_value > max_value");
    const Extents ext{min_value, max_value};
    check_range(ext);
    std::vector<Element> a(n);
    if (n == 1) {
        a[0] = min_value;
        return ElementSeq(std::move(a));
    }
    const unsigned __int128 spread = ext.spread();
    for (std::uint64_t i = 0; i < n; ++i) {
        const auto step = static_cast<std::uint64_t>(spread * i / (n - 1));
        a[i] = static_cast<Element>(static_cast<std::uint64_t>(min_value) + step);
    }
    return ElementSeq(std::move(a));
}

ElementSeq fisher_yates_shuffle(ElementSeq a, Xoshiro256ss& rng) {
    std::vector<Element> items = std::move(a).release();
    fisher_yates_shuffle(std::span(items), rng);
    return ElementSeq(std::move(items));
}

void run_algorithm(AlgorithmId id, std::span<Element> a, const ExperimentConfig& config,
                   CostLedger& ledger) {
    switch (id) {
    case AlgorithmId::merge: merge_sort(a, ledger); break;
    case AlgorithmId::quick: quicksort(a, ledger); break;
    case AlgorithmId::counting: counting_sort_value(a, ledger, config.bin_cap); break;
    case AlgorithmId::radix: radix_sort_lsd(a, config.radix_base.base_for(a.size()), ledger); break;
    case AlgorithmId::qr: qr_sort_auto_inplace(a, config.divisor_strategy, ledger); break;
    }
}

TrialResult run_trial(std::span<const Element> shuffled, std::uint64_t trial,
                      const ExperimentConfig& config) {
    TrialResult out;
    const std::uint64_t n = shuffled.size();
    std::uint64_t m = 0;
    if (n > 0) {
        const auto [lo, hi] = std::minmax_element(shuffled.begin(), shuffled.end());
        m = Extents{*lo, *hi}.range();
    }

    std::vector<Element> reference(shuffled.begin(), shuffled.end());
    std::sort(reference.begin(), reference.end());

    std::vector<Element> work;
    for (AlgorithmId id : canonical_algorithms(config.algorithms)) {
        work.assign(shuffled.begin(), shuffled.end());
        CostLedger ledger;
        const auto start = std::chrono::steady_clock::now();
        try {
            run_algorithm(id, std::span(work), config, ledger);
        } catch (const Error& e) {
            if (e.code() != Errc::range_exceeds_memory) throw;
            out.skips.push_back({n, trial, id, e.what()});
            continue;
        }
        const auto stop = std::chrono::steady_clock::now();
        if (work != reference)
            throw Error(Errc::correctness_fault,
                        std::string(to_string(id)) + " produced wrong output at n=" +
                            std::to_string(n) + ", trial " + std::to_string(trial));

        ResultRecord rec;
        rec.n = n;
        rec.m = m;
        rec.trial = trial;
        rec.algorithm = id;
        rec.cost = weighted_only(ledger);
        if (config.measure_wall_time)
            rec.wall_ns = static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
        out.records.push_back(rec);
    }
    return out;
}

TrialResult run_sweep(const ExperimentConfig& config) {
    config.validate();
    const std::vector<std::uint64_t> lengths = config.lengths();
    std::vector<TrialResult> per_length(lengths.size());
    std::vector<std::exception_ptr> errors(lengths.size());
    const auto count = static_cast<std::ptrdiff_t>(lengths.size());

    if (config.jobs <= 1) {
        for (std::ptrdiff_t i = 0; i < count; ++i)
            per_length[i] = run_length(lengths[i], config);
    } else {
#pragma omp parallel for schedule(dynamic, 1) num_threads(config.jobs)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            try {
                per_length[i] = run_length(lengths[i], config);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    TrialResult out;
    for (auto& part : per_length) {
        out.records.insert(out.records.end(), part.records.begin(), part.records.end());
        out.skips.insert(out.skips.end(), part.skips.begin(), part.skips.end());
    }
    return out;
}

} // namespace qrsort
