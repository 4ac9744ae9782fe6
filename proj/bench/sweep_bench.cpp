// Wall-clock comparison of the serial sweep (jobs = 1, the reference path)
// against the OpenMP sweep. Both must produce identical records.
//
//   sweep_bench [jobs] [max_length] [max_value]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include "qrsort/harness.hpp"

namespace {

double seconds_for(const qrsort::ExperimentConfig& config, qrsort::TrialResult& out) {
    const auto start = std::chrono::steady_clock::now();
    out = qrsort::run_sweep(config);
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

} // namespace

int main(int argc, char** argv) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned jobs = argc > 1 ? static_cast<unsigned>(std::stoul(argv[1])) : std::max(2u, hw);

    qrsort::ExperimentConfig config;
    config.min_length = 1'000;
    config.max_length = argc > 2 ? std::stoull(argv[2]) : 50'000;
    config.length_inc = 1'000;
    config.max_value = argc > 3 ? std::stoll(argv[3]) : 500'000;
    config.trial_count = 3;
    config.seed = 7;

    qrsort::TrialResult serial, parallel;
    config.jobs = 1;
    const double t_serial = seconds_for(config, serial);
    config.jobs = jobs;
    const double t_parallel = seconds_for(config, parallel);

    const bool same = serial.records == parallel.records;
    std::cout << "lengths " << config.min_length << ".." << config.max_length << " step "
              << config.length_inc << ", m = " << config.max_value + 1 << ", "
              << serial.records.size() << " records\n"
              << "serial   (jobs=1): " << t_serial << " s\n"
              << "parallel (jobs=" << jobs << "): " << t_parallel << " s  speedup "
              << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x\n"
              << "records identical: " << (same ? "yes" : "NO") << '\n';
    return same ? EXIT_SUCCESS : EXIT_FAILURE;
}
