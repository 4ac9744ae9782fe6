#include "qrsort/reporting.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>
#include <utility>

namespace qrsort {

namespace {

std::string shortest(double v) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

std::string fixed2(double v) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::fixed, 2);
    return std::string(buf.data(), end);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

// Data lines with their 1-based line numbers; checks the header.
std::vector<std::pair<std::size_t, std::string_view>> csv_rows(std::string_view text,
                                                               std::string_view header) {
    std::vector<std::string_view> lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty() || lines.front() != header)
        throw Error(Errc::parse_error, "line 1: expected header '" + std::string(header) + "'");
    std::vector<std::pair<std::size_t, std::string_view>> rows;
    for (std::size_t i = 1; i < lines.size(); ++i)
        rows.emplace_back(i + 1, lines[i]);
    return rows;
}

[[noreturn]] void bad_row(std::size_t line, const std::string& why) {
    throw Error(Errc::parse_error, "line " + std::to_string(line) + ": " + why);
}

template <class Int>
Int parse_int(std::string_view field, std::size_t line, const char* name) {
    Int v{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
        bad_row(line, std::string("bad ") + name + " '" + std::string(field) + "'");
    return v;
}

double parse_double(std::string_view field, std::size_t line, const char* name) {
    double v{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
        bad_row(line, std::string("bad ") + name + " '" + std::string(field) + "'");
    return v;
}

AlgorithmId parse_algorithm_field(std::string_view field, std::size_t line) {
    auto id = parse_algorithm(field);
    if (!id) bad_row(line, "unknown algorithm '" + std::string(field) + "'");
    return *id;
}

} // namespace

std::vector<AggregateRow> aggregate(const std::vector<ResultRecord>& records) {
    struct Acc {
        unsigned __int128 sum = 0;
        std::uint64_t count = 0;
    };
    std::map<std::pair<AlgorithmId, std::uint64_t>, Acc> groups;
    for (const auto& r : records) {
        Acc& acc = groups[{r.algorithm, r.n}];
        acc.sum += total_units(r.cost);
        acc.count += 1;
    }
    std::vector<AggregateRow> rows;
    rows.reserve(groups.size());
    for (const auto& [key, acc] : groups) {
        const auto whole = static_cast<long double>(acc.sum / acc.count);
        const auto frac = static_cast<long double>(acc.sum % acc.count) / acc.count;
        const double mean = static_cast<double>(whole + frac);
        rows.push_back({key.second, key.first, mean, std::log(mean)});
    }
    return rows;
}

std::string format_raw_csv(const std::vector<ResultRecord>& records) {
    std::string out(kRawCsvHeader);
    out += '\n';
    for (const auto& r : records) {
        out += std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + std::to_string(r.trial) +
               ',' + std::string(to_string(r.algorithm)) + ',' + to_csv_line(r.cost) + ',' +
               std::to_string(r.wall_ns) + '\n';
    }
    return out;
}

std::string format_aggregate_csv(const std::vector<AggregateRow>& rows) {
    std::string out(kAggregateCsvHeader);
    out += '\n';
    for (const auto& r : rows)
        out += std::to_string(r.n) + ',' + std::string(to_string(r.algorithm)) + ',' +
               shortest(r.mean_units) + ',' + shortest(r.ln_mean_units) + '\n';
    return out;
}

std::vector<ResultRecord> parse_raw_csv(std::string_view text) {
    std::vector<ResultRecord> out;
    for (const auto& [line, row] : csv_rows(text, kRawCsvHeader)) {
        const auto f = split(row, ',');
        if (f.size() != 11) bad_row(line, "expected 11 fields, got " + std::to_string(f.size()));
        ResultRecord r;
        r.n = parse_int<std::uint64_t>(f[0], line, "n");
        r.m = parse_int<std::uint64_t>(f[1], line, "m");
        r.trial = parse_int<std::uint64_t>(f[2], line, "trial");
        r.algorithm = parse_algorithm_field(f[3], line);
        r.cost.array_accesses = parse_int<std::uint64_t>(f[4], line, "array_accesses");
        r.cost.comparisons = parse_int<std::uint64_t>(f[5], line, "comparisons");
        r.cost.divisions = parse_int<std::uint64_t>(f[6], line, "divisions");
        r.cost.modulos = parse_int<std::uint64_t>(f[7], line, "modulos");
        r.cost.bitwise_ops = parse_int<std::uint64_t>(f[8], line, "bitwise_ops");
        const auto total = parse_int<std::uint64_t>(f[9], line, "total_units");
        if (total != total_units(r.cost)) bad_row(line, "total_units does not match counters");
        r.wall_ns = parse_int<std::uint64_t>(f[10], line, "wall_ns");
        out.push_back(r);
    }
    return out;
}

std::vector<AggregateRow> parse_aggregate_csv(std::string_view text) {
    std::vector<AggregateRow> out;
    for (const auto& [line, row] : csv_rows(text, kAggregateCsvHeader)) {
        const auto f = split(row, ',');
        if (f.size() != 4) bad_row(line, "expected 4 fields, got " + std::to_string(f.size()));
        AggregateRow r;
        r.n = parse_int<std::uint64_t>(f[0], line, "n");
        r.algorithm = parse_algorithm_field(f[1], line);
        r.mean_units = parse_double(f[2], line, "mean_units");
        r.ln_mean_units = parse_double(f[3], line, "ln_mean_units");
        if (!(r.mean_units > 0.0)) bad_row(line, "mean_units must be positive");
        out.push_back(r);
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io_error, "cannot open " + path.string() + " for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw Error(Errc::io_error, "read failed: " + path.string());
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io_error, "cannot open " + path.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw Error(Errc::io_error, "write failed: " + path.string());
}

void write_raw_csv(const std::vector<ResultRecord>& records, const std::filesystem::path& path) {
    write_file(path, format_raw_csv(records));
}

void write_aggregate_csv(const std::vector<AggregateRow>& rows, const std::filesystem::path& path) {
    write_file(path, format_aggregate_csv(rows));
}

namespace {

constexpr double kWidth = 900, kHeight = 560;
constexpr double kLeft = 80, kRight = 170, kTop = 50, kBottom = 60;

const char* colour(AlgorithmId id) {
    switch (id) {
    case AlgorithmId::merge: return "#1f77b4";
    case AlgorithmId::quick: return "#ff7f0e";
    case AlgorithmId::counting: return "#2ca02c";
    case AlgorithmId::radix: return "#9467bd";
    case AlgorithmId::qr: return "#d62728";
    }
    return "#000000";
}

std::string label(AlgorithmId id) {
    switch (id) {
    case AlgorithmId::merge: return "Merge Sort";
    case AlgorithmId::quick: return "Quicksort";
    case AlgorithmId::counting: return "Counting Sort";
    case AlgorithmId::radix: return "Radix Sort";
    case AlgorithmId::qr: return "QR Sort";
    }
    return "?";
}

} // namespace

std::string render_svg(const std::vector<AggregateRow>& rows) {
    if (rows.empty()) throw Error(Errc::invalid_argument, "nothing to plot");

    std::map<AlgorithmId, std::vector<std::pair<double, double>>> series;
    double x_lo = rows.front().n, x_hi = x_lo;
    double y_lo = rows.front().ln_mean_units, y_hi = y_lo;
    for (const auto& r : rows) {
        series[r.algorithm].emplace_back(static_cast<double>(r.n), r.ln_mean_units);
        x_lo = std::min(x_lo, static_cast<double>(r.n));
        x_hi = std::max(x_hi, static_cast<double>(r.n));
        y_lo = std::min(y_lo, r.ln_mean_units);
        y_hi = std::max(y_hi, r.ln_mean_units);
    }
    if (x_hi == x_lo) { x_lo -= 1; x_hi += 1; }
    y_lo = std::floor(y_lo);
    y_hi = std::ceil(y_hi);
    if (y_hi == y_lo) y_hi += 1;

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * pw; };
    auto py = [&](double y) { return kTop + (y_hi - y) / (y_hi - y_lo) * ph; };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed2(kWidth) +
         "\" height=\"" + fixed2(kHeight) + "\" viewBox=\"0 0 " + fixed2(kWidth) + ' ' +
         fixed2(kHeight) + "\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    s += "<text x=\"" + fixed2(kLeft + pw / 2) +
         "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
         "Computational units by array length</text>\n";

    // Axes and ticks.
    s += "<g stroke=\"#000000\" stroke-width=\"1\" fill=\"none\">\n";
    s += "<line x1=\"" + fixed2(kLeft) + "\" y1=\"" + fixed2(kTop + ph) + "\" x2=\"" +
         fixed2(kLeft + pw) + "\" y2=\"" + fixed2(kTop + ph) + "\"/>\n";
    s += "<line x1=\"" + fixed2(kLeft) + "\" y1=\"" + fixed2(kTop) + "\" x2=\"" + fixed2(kLeft) +
         "\" y2=\"" + fixed2(kTop + ph) + "\"/>\n";
    s += "</g>\n";
    s += "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#000000\">\n";
    constexpr int kXTicks = 5;
    for (int i = 0; i <= kXTicks; ++i) {
        const double x = x_lo + (x_hi - x_lo) * i / kXTicks;
        s += "<line x1=\"" + fixed2(px(x)) + "\" y1=\"" + fixed2(kTop + ph) + "\" x2=\"" +
             fixed2(px(x)) + "\" y2=\"" + fixed2(kTop + ph + 5) + "\" stroke=\"#000000\"/>\n";
        s += "<text x=\"" + fixed2(px(x)) + "\" y=\"" + fixed2(kTop + ph + 18) +
             "\" text-anchor=\"middle\">" + std::to_string(std::llround(x)) + "</text>\n";
    }
    const double y_step = std::max(1.0, std::ceil((y_hi - y_lo) / 10.0));
    for (double y = y_lo; y <= y_hi + 1e-9; y += y_step) {
        s += "<line x1=\"" + fixed2(kLeft - 5) + "\" y1=\"" + fixed2(py(y)) + "\" x2=\"" +
             fixed2(kLeft) + "\" y2=\"" + fixed2(py(y)) + "\" stroke=\"#000000\"/>\n";
        s += "<text x=\"" + fixed2(kLeft - 8) + "\" y=\"" + fixed2(py(y) + 4) +
             "\" text-anchor=\"end\">" + fixed2(y) + "</text>\n";
    }
    s += "<text x=\"" + fixed2(kLeft + pw / 2) + "\" y=\"" + fixed2(kHeight - 15) +
         "\" text-anchor=\"middle\" font-size=\"13\">array length n</text>\n";
    s += "<text x=\"20\" y=\"" + fixed2(kTop + ph / 2) + "\" text-anchor=\"middle\" font-size=\"13\" "
         "transform=\"rotate(-90 20 " + fixed2(kTop + ph / 2) + ")\">ln(mean computational units)</text>\n";
    s += "</g>\n";

    int slot = 0;
    for (auto& [id, points] : series) {
        std::sort(points.begin(), points.end());
        s += "<polyline class=\"series\" data-algorithm=\"" + std::string(to_string(id)) +
             "\" fill=\"none\" stroke=\"" + colour(id) + "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (i) s += ' ';
            s += fixed2(px(points[i].first)) + ',' + fixed2(py(points[i].second));
        }
        s += "\"/>\n";

        const double ly = kTop + 10 + 22.0 * slot++;
        const double lx = kLeft + pw + 20;
        s += "<g class=\"legend\"><line x1=\"" + fixed2(lx) + "\" y1=\"" + fixed2(ly) + "\" x2=\"" +
             fixed2(lx + 24) + "\" y2=\"" + fixed2(ly) + "\" stroke=\"" + colour(id) +
             "\" stroke-width=\"2\"/><text x=\"" + fixed2(lx + 30) + "\" y=\"" + fixed2(ly + 4) +
             "\" font-family=\"sans-serif\" font-size=\"12\">" + label(id) + "</text></g>\n";
    }
    s += "</svg>\n";
    return s;
}

void render_plot(const std::vector<AggregateRow>& rows, const std::filesystem::path& path) {
    write_file(path, render_svg(rows));
}

} // namespace qrsort
