#pragma once

#include <stdexcept>
#include <string>

namespace qrsort {

enum class Errc {
    invalid_divisor,      // d == 0
    mode_mismatch,        // BITWISE with d != 2^c, SUBTRACTION_FREE with negatives
    key_out_of_range,     // key >= key_bound handed to counting_key_sort
    range_overflow,       // max - min + 1 does not fit in int64
    invalid_range,        // m < 1
    range_exceeds_memory, // counting sort bin guard tripped
    invalid_argument,
    correctness_fault,    // harness caught an unsorted / disagreeing output
    io_error,
    parse_error,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace qrsort
