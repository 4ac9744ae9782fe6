#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qrsort::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1; // selftest property violated
inline constexpr int kUsage = 2;   // bad flags or bad data
inline constexpr int kIo = 3;

/// Runs `qrsort <args...>` (program name excluded) against the given streams.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// Parses integer-per-line text. Throws Error(parse_error) naming the line.
std::vector<std::int64_t> parse_integer_lines(const std::string& text);

} // namespace qrsort::cli
