#pragma once

#include <stdexcept>
#include <string>

namespace cn {

// Bad field specification (q even, not a prime power, reducible modulus, ...).
// CLI maps this to exit code 2.
struct field_error : std::runtime_error {
    explicit field_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input is not a rank-one net: the three forms are dependent, or the resulting
// plane misses the Veronese surface. CLI maps this to exit code 3.
struct not_rank_one_error : std::runtime_error {
    explicit not_rank_one_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A condition that must be unreachable failed (table lookup miss, row-sum
// violation in embedded data, non-integral polynomial value). CLI exit code 4.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

// A resource guard refused a brute-force computation; retry with --force where
// permitted. CLI maps this to exit code 1.
struct guard_error : std::runtime_error {
    explicit guard_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file or option value. CLI maps this to exit code 1.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cn
