#include "cli.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <ostream>
#include <span>
#include <string_view>

#include <CLI11.hpp>

#include "qrsort/baselines.hpp"
#include "qrsort/divisor.hpp"
#include "qrsort/error.hpp"
#include "qrsort/harness.hpp"
#include "qrsort/qr_sort.hpp"
#include "qrsort/reporting.hpp"
#include "qrsort/selfcheck.hpp"

namespace qrsort::cli {

namespace {

struct UsageError {
    std::string message;
};

int exit_code_for(Errc code) {
    switch (code) {
    case Errc::io_error: return kIo;
    case Errc::correctness_fault: return kFailure;
    default: return kUsage;
    }
}

DivisorStrategy parse_strategy(const std::string& name) {
    if (name == "sqrt") return DivisorStrategy::sqrt_range();
    if (name == "bypass") return DivisorStrategy::bypass_quotient();
    if (name == "pow2") return DivisorStrategy::power_of_two();
    throw UsageError{"unknown strategy '" + name + "'"};
}

const std::vector<std::string> kStrategyNames{"sqrt", "bypass", "pow2"};
const std::vector<std::string> kModeNames{"general", "subfree", "bitwise"};
const std::vector<std::string> kAlgorithmNames{"merge", "quick", "counting", "radix", "qr"};

struct SortArgs {
    std::string input;
    std::string output;
    std::string algorithm = "qr";
    std::uint64_t divisor = 0;
    std::string strategy = "sqrt";
    std::string mode;
    std::uint64_t radix_base = 0; // 0: base = n
    std::uint64_t bin_cap = kDefaultBinCap;
    bool stats = false;
};

struct BenchArgs {
    std::uint64_t min_length = 10'000;
    std::uint64_t max_length = 1'000'000;
    std::uint64_t length_inc = 10'000;
    std::int64_t min_value = 0;
    std::int64_t max_value = 50'000;
    std::uint64_t trials = 10;
    std::uint64_t seed = 1;
    std::vector<std::string> algorithms = kAlgorithmNames;
    std::string strategy = "sqrt";
    std::uint64_t divisor = 0;
    std::string radix_base = "n";
    std::uint64_t bin_cap = kDefaultBinCap;
    unsigned jobs = 1;
    bool timing = false;
    std::string out_raw = "qrsort_raw.csv";
    std::string out_agg = "qrsort_agg.csv";
    std::string out_plot = "qrsort_plot.svg";
};

struct PlotArgs {
    std::string in;
    std::string out;
};

struct SelftestArgs {
    std::uint64_t cases = 10'000;
    std::uint64_t seed = 1;
};

int cmd_sort(const SortArgs& args, std::ostream& err) {
    std::vector<Element> values = parse_integer_lines(read_file(args.input));
    CostLedger ledger;
    const auto id = parse_algorithm(args.algorithm);
    if (!id) throw UsageError{"unknown algorithm '" + args.algorithm + "'"};

    if (*id == AlgorithmId::qr) {
        if (!values.empty()) {
            const Extents ext = ElementSeq(values).extents().value();
            const DivisorStrategy strategy = args.divisor ? DivisorStrategy::fixed(args.divisor)
                                                          : parse_strategy(args.strategy);
            const std::uint64_t d = select_divisor(ext.range(), strategy);
            QrKeyMode mode = mode_for(strategy, d);
            if (args.mode == "general") mode = QrKeyMode::general();
            else if (args.mode == "subfree") mode = QrKeyMode::subtraction_free();
            else if (args.mode == "bitwise") {
                if (!std::has_single_bit(d))
                    throw UsageError{"--mode bitwise needs a power-of-two divisor, got " +
                                     std::to_string(d)};
                mode = QrKeyMode::bitwise(static_cast<unsigned>(std::countr_zero(d)));
            }
            qr_sort_inplace(std::span(values), d, mode, ledger);
        }
    } else {
        ExperimentConfig config;
        config.bin_cap = args.bin_cap;
        if (args.radix_base != 0) {
            if (args.radix_base < 2) throw UsageError{"--radix-base must be at least 2"};
            config.radix_base = RadixBaseRule::fixed(args.radix_base);
        }
        run_algorithm(*id, std::span(values), config, ledger);
    }

    std::string text;
    for (Element v : values) {
        text += std::to_string(v);
        text += '\n';
    }
    write_file(args.output, text);
    if (args.stats) err << to_csv_line(ledger) << '\n';
    return kOk;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
    ExperimentConfig config;
    config.min_length = args.min_length;
    config.max_length = args.max_length;
    config.length_inc = args.length_inc;
    config.min_value = args.min_value;
    config.max_value = args.max_value;
    config.trial_count = args.trials;
    config.seed = args.seed;
    config.algorithms.clear();
    for (const auto& name : args.algorithms) {
        const auto id = parse_algorithm(name);
        if (!id) throw UsageError{"unknown algorithm '" + name + "'"};
        config.algorithms.push_back(*id);
    }
    config.divisor_strategy =
        args.divisor ? DivisorStrategy::fixed(args.divisor) : parse_strategy(args.strategy);
    if (args.radix_base != "n") {
        std::uint64_t b = 0;
        const auto* end = args.radix_base.data() + args.radix_base.size();
        auto [ptr, ec] = std::from_chars(args.radix_base.data(), end, b);
        if (ec != std::errc{} || ptr != end || b < 2)
            throw UsageError{"--radix-base must be 'n' or an integer >= 2"};
        config.radix_base = RadixBaseRule::fixed(b);
    }
    config.bin_cap = args.bin_cap;
    config.jobs = args.jobs;
    config.measure_wall_time = args.timing;
    config.validate();

    const TrialResult result = run_sweep(config);
    for (const auto& skip : result.skips)
        err << "skipped " << to_string(skip.algorithm) << " at n=" << skip.n << " trial "
            << skip.trial << ": " << skip.reason << '\n';

    const auto rows = aggregate(result.records);
    write_raw_csv(result.records, args.out_raw);
    write_aggregate_csv(rows, args.out_agg);
    if (rows.empty()) throw Error(Errc::invalid_argument, "every run was skipped; nothing to plot");
    render_plot(rows, args.out_plot);
    out << result.records.size() << " records, " << rows.size() << " aggregate rows\n";
    return kOk;
}

int cmd_plot(const PlotArgs& args) {
    const auto rows = parse_aggregate_csv(read_file(args.in));
    if (rows.empty()) throw UsageError{args.in + ": no data rows to plot"};
    render_plot(rows, args.out);
    return kOk;
}

int cmd_selftest(const SelftestArgs& args, std::ostream& out) {
    bool ok = true;
    for (const auto& report : run_selftest(args.cases, args.seed)) {
        out << (report.passed() ? "PASS " : "FAIL ") << report.name << " (" << report.cases
            << " cases, " << report.violations << " violations)\n";
        ok = ok && report.passed();
    }
    return ok ? kOk : kFailure;
}

} // namespace

std::vector<std::int64_t> parse_integer_lines(const std::string& text) {
    std::vector<std::int64_t> values;
    std::size_t line = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        ++line;
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        const std::string_view field(text.data() + start, end - start);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
            throw Error(Errc::parse_error,
                        "line " + std::to_string(line) + ": not a 64-bit integer: '" +
                            std::string(field) + "'");
        values.push_back(v);
        start = end + 1;
    }
    return values;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Instrumented integer sorting and computational-unit benchmarks", "qrsort"};
    app.require_subcommand(1);

    SortArgs sort_args;
    auto* sort = app.add_subcommand("sort", "Sort a file of integers, one per line");
    sort->add_option("input", sort_args.input, "Input file")->required();
    sort->add_option("-o,--output", sort_args.output, "Output file")->required();
    sort->add_option("--algorithm", sort_args.algorithm)->check(CLI::IsMember(kAlgorithmNames));
    auto* sort_div = sort->add_option("--divisor", sort_args.divisor, "Fixed QR divisor")
                         ->check(CLI::PositiveNumber);
    auto* sort_strat = sort->add_option("--strategy", sort_args.strategy)
                           ->check(CLI::IsMember(kStrategyNames));
    sort_div->excludes(sort_strat);
    sort->add_option("--mode", sort_args.mode)->check(CLI::IsMember(kModeNames));
    sort->add_option("--radix-base", sort_args.radix_base, "Radix base (default: n)");
    sort->add_option("--bin-cap", sort_args.bin_cap)->check(CLI::PositiveNumber);
    sort->add_flag("--stats", sort_args.stats, "Print the cost ledger to stderr");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Run a computational-unit sweep");
    bench->add_option("--min-length", bench_args.min_length);
    bench->add_option("--max-length", bench_args.max_length);
    bench->add_option("--length-inc", bench_args.length_inc);
    bench->add_option("--min-value", bench_args.min_value);
    bench->add_option("--max-value", bench_args.max_value);
    bench->add_option("--trials", bench_args.trials);
    bench->add_option("--seed", bench_args.seed)->envname("QRSORT_SEED");
    bench->add_option("--algorithms", bench_args.algorithms)
        ->delimiter(',')
        ->check(CLI::IsMember(kAlgorithmNames));
    auto* bench_strat = bench->add_option("--strategy", bench_args.strategy)
                            ->check(CLI::IsMember(kStrategyNames));
    auto* bench_div = bench->add_option("--divisor", bench_args.divisor)->check(CLI::PositiveNumber);
    bench_div->excludes(bench_strat);
    bench->add_option("--radix-base", bench_args.radix_base, "'n' or a fixed base");
    bench->add_option("--bin-cap", bench_args.bin_cap);
    bench->add_option("--jobs", bench_args.jobs, "Parallel lengths (results do not depend on it)");
    bench->add_flag("--timing", bench_args.timing, "Record wall-clock nanoseconds");
    bench->add_option("--out-raw", bench_args.out_raw);
    bench->add_option("--out-agg", bench_args.out_agg);
    bench->add_option("--out-plot", bench_args.out_plot);

    PlotArgs plot_args;
    auto* plot = app.add_subcommand("plot", "Render an aggregate CSV as SVG");
    plot->add_option("--in", plot_args.in)->required();
    plot->add_option("--out", plot_args.out)->required();

    SelftestArgs selftest_args;
    auto* selftest = app.add_subcommand("selftest", "Run the key-property suites");
    selftest->add_option("--cases", selftest_args.cases)->check(CLI::PositiveNumber);
    selftest->add_option("--seed", selftest_args.seed)->envname("QRSORT_SEED");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return kUsage;
    }

    try {
        if (*sort) return cmd_sort(sort_args, err);
        if (*bench) return cmd_bench(bench_args, out, err);
        if (*plot) return cmd_plot(plot_args);
        if (*selftest) return cmd_selftest(selftest_args, out);
    } catch (const UsageError& e) {
        err << "qrsort: " << e.message << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "qrsort: " << to_string(e.code()) << ": " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return kUsage;
}

} // namespace qrsort::cli
