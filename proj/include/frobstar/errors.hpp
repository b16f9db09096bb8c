#pragma once

#include <stdexcept>
#include <string>

namespace frobstar {

// Arithmetic between values that live in different rings.
struct ring_mismatch : std::logic_error {
    explicit ring_mismatch(const std::string& what) : std::logic_error(what) {}
};

// Vectors/modules of incompatible rank.
struct rank_mismatch : std::logic_error {
    explicit rank_mismatch(const std::string& what) : std::logic_error(what) {}
};

// Input text could not be parsed.  Carries a position for diagnostics.
struct parse_error : std::runtime_error {
    int line;
    int column;
    parse_error(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

// The computation is mathematically meaningful but falls outside the
// supported envelope (or an internal stabilization guard tripped).
// CLI maps this to exit code 1.
struct capability_error : std::runtime_error {
    explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace frobstar
