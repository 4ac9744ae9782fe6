#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qrsort/baselines.hpp"
#include "qrsort/harness.hpp"

namespace qrsort {

struct AggregateRow {
    std::uint64_t n = 0;
    AlgorithmId algorithm = AlgorithmId::qr;
    double mean_units = 0.0;
    double ln_mean_units = 0.0;

    friend bool operator==(const AggregateRow&, const AggregateRow&) = default;
};

inline constexpr std::string_view kRawCsvHeader =
    "n,m,trial,algorithm,array_accesses,comparisons,divisions,modulos,bitwise_ops,total_units,wall_ns";
inline constexpr std::string_view kAggregateCsvHeader = "n,algorithm,mean_units,ln_mean_units";

/// Mean total units per (algorithm, n), ordered by (algorithm, n). The sum is
/// exact; only the final division rounds.
std::vector<AggregateRow> aggregate(const std::vector<ResultRecord>& records);

std::string format_raw_csv(const std::vector<ResultRecord>& records);
std::string format_aggregate_csv(const std::vector<AggregateRow>& rows);

// Parsers throw Error(Errc::parse_error) naming the 1-based line of the
// offending row.
std::vector<ResultRecord> parse_raw_csv(std::string_view text);
std::vector<AggregateRow> parse_aggregate_csv(std::string_view text);

void write_raw_csv(const std::vector<ResultRecord>& records, const std::filesystem::path& path);
void write_aggregate_csv(const std::vector<AggregateRow>& rows, const std::filesystem::path& path);

/// Line chart of ln(mean units) against n, one polyline per algorithm.
/// Throws Errc::invalid_argument for an empty row set.
std::string render_svg(const std::vector<AggregateRow>& rows);
void render_plot(const std::vector<AggregateRow>& rows, const std::filesystem::path& path);

// File helpers; failures raise Errc::io_error with the path in the message.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

} // namespace qrsort
