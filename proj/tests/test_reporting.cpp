#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <random>
#include <string>

#include "qrsort/harness.hpp"
#include "qrsort/reporting.hpp"

using namespace qrsort;

namespace {

ResultRecord record_with_units(std::uint64_t n, std::uint64_t trial, AlgorithmId id,
                               std::uint64_t accesses) {
    ResultRecord r;
    r.n = n;
    r.m = 1000;
    r.trial = trial;
    r.algorithm = id;
    r.cost.array_accesses = accesses;
    return r;
}

std::vector<ResultRecord> sweep_records() {
    ExperimentConfig config;
    config.min_length = 200;
    config.max_length = 2000;
    config.length_inc = 200;
    config.max_value = 5000;
    config.trial_count = 10;
    config.seed = 99;
    return run_sweep(config).records;
}

std::size_t count_of(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

} // namespace

TEST_SUITE("aggregate") {
    TEST_CASE("mean and natural log") {
        const auto rows = aggregate({record_with_units(10, 0, AlgorithmId::qr, 10),
                                     record_with_units(10, 1, AlgorithmId::qr, 20),
                                     record_with_units(10, 2, AlgorithmId::qr, 30)});
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].mean_units == 20.0);
        CHECK(rows[0].ln_mean_units == doctest::Approx(2.9957).epsilon(1e-4));
        CHECK(rows[0].ln_mean_units == std::log(20.0));
    }

    TEST_CASE("single trial mean is that trial") {
        const auto rows = aggregate({record_with_units(5, 0, AlgorithmId::merge, 77)});
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].mean_units == 77.0);
    }

    TEST_CASE("rows are ordered by (algorithm, n) and independent of record order") {
        auto records = sweep_records();
        const auto rows = aggregate(records);
        CHECK(std::is_sorted(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
            return std::pair(a.algorithm, a.n) < std::pair(b.algorithm, b.n);
        }));
        std::mt19937_64 rng(1);
        std::shuffle(records.begin(), records.end(), rng);
        CHECK(aggregate(records) == rows);
    }

    TEST_CASE("means match a recomputation from the raw csv") {
        const auto records = sweep_records();
        const auto rows = aggregate(records);
        // Recompute from the serialized text alone, field by field.
        const std::string csv = format_raw_csv(records);
        std::map<std::pair<std::string, std::uint64_t>, std::pair<double, int>> sums;
        std::size_t start = csv.find('\n') + 1;
        while (start < csv.size()) {
            const std::size_t end = csv.find('\n', start);
            std::vector<std::string> f;
            std::size_t s = start;
            for (std::size_t c = csv.find(',', s); c < end; c = csv.find(',', s)) {
                f.push_back(csv.substr(s, c - s));
                s = c + 1;
            }
            f.push_back(csv.substr(s, end - s));
            auto& acc = sums[{f[3], std::stoull(f[0])}];
            acc.first += std::stod(f[9]);
            acc.second += 1;
            start = end + 1;
        }
        REQUIRE(sums.size() == rows.size());
        for (const auto& row : rows) {
            const auto& acc = sums.at({std::string(to_string(row.algorithm)), row.n});
            CHECK(acc.second == 10);
            CHECK(row.mean_units == doctest::Approx(acc.first / acc.second).epsilon(1e-12));
        }
    }
}

TEST_SUITE("csv") {
    TEST_CASE("empty record list is header only") {
        CHECK(format_raw_csv({}) == std::string(kRawCsvHeader) + "\n");
        CHECK(format_aggregate_csv({}) == std::string(kAggregateCsvHeader) + "\n");
        CHECK(parse_raw_csv(format_raw_csv({})).empty());
    }

    TEST_CASE("one record is two lines and parses back") {
        ResultRecord r = record_with_units(8, 1, AlgorithmId::radix, 123);
        r.cost.divisions = 4;
        r.cost.bitwise_ops = 2;
        r.wall_ns = 987'654'321;
        const std::string text = format_raw_csv({r});
        CHECK(count_of(text, "\n") == 2);
        CHECK(text.substr(text.find('\n') + 1) == "8,1000,1,radix,123,0,4,0,2,185,987654321\n");
        CHECK(parse_raw_csv(text) == std::vector<ResultRecord>{r});
    }

    TEST_CASE("raw round trip over a sweep") {
        auto records = sweep_records();
        for (std::size_t i = 0; i < records.size(); ++i) records[i].wall_ns = i * 1'000'003;
        CHECK(parse_raw_csv(format_raw_csv(records)) == records);
    }

    TEST_CASE("aggregate round trip is exact") {
        const auto rows = aggregate(sweep_records());
        CHECK(parse_aggregate_csv(format_aggregate_csv(rows)) == rows);
    }

    TEST_CASE("malformed rows report their line") {
        const std::string bad = std::string(kAggregateCsvHeader) + "\n10,qr,5,1.6\n10,bogus,5,1.6\n";
        try {
            parse_aggregate_csv(bad);
            FAIL("expected parse error");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::parse_error);
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
        CHECK_THROWS_AS(parse_raw_csv("n,m\n"), Error);
        CHECK_THROWS_AS(parse_raw_csv(std::string(kRawCsvHeader) + "\n1,2,3,qr,1,1,1,1,1,999,0\n"), Error);
    }

    TEST_CASE("files") {
        const auto dir = std::filesystem::temp_directory_path() / "qrsort_reporting_test";
        std::filesystem::create_directories(dir);
        const auto records = sweep_records();
        write_raw_csv(records, dir / "raw.csv");
        CHECK(parse_raw_csv(read_file(dir / "raw.csv")) == records);
        try {
            write_raw_csv(records, dir / "missing" / "raw.csv");
            FAIL("expected io error");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::io_error);
            CHECK(std::string(e.what()).find("missing") != std::string::npos);
        }
        std::filesystem::remove_all(dir);
    }
}

TEST_SUITE("svg") {
    TEST_CASE("one algorithm, two points") {
        const std::vector<AggregateRow> rows{{10, AlgorithmId::qr, 100.0, std::log(100.0)},
                                             {20, AlgorithmId::qr, 250.0, std::log(250.0)}};
        const std::string svg = render_svg(rows);
        CHECK(svg.rfind("<?xml", 0) == 0);
        CHECK(count_of(svg, "<polyline") == 1);
        const auto pts = svg.find("points=\"");
        const auto pts_end = svg.find('"', pts + 8);
        CHECK(count_of(svg.substr(pts + 8, pts_end - pts - 8), ",") == 2);
        CHECK(svg.find("</svg>") != std::string::npos);
    }

    TEST_CASE("five algorithms, deterministic bytes") {
        const auto rows = aggregate(sweep_records());
        const std::string svg = render_svg(rows);
        CHECK(count_of(svg, "<polyline") == 5);
        CHECK(count_of(svg, "class=\"legend\"") == 5);
        CHECK(svg == render_svg(rows));
    }

    TEST_CASE("empty input is rejected") { CHECK_THROWS_AS(render_svg({}), Error); }
}
