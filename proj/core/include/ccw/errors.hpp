#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ccw {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// input breaks a documented precondition or invariant
struct validation_error : error {
    using error::error;
};

// malformed input text; line numbers are 1-based
struct parse_error : validation_error {
    parse_error(const std::string& msg, int line_no)
        : validation_error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
    int line;
};

// instance exceeds a configured exact-search cap
struct capacity_error : error {
    using error::error;
};

// structurally valid input on which the operation is meaningless
struct degenerate_input_error : validation_error {
    using validation_error::validation_error;
};

// non-chordal input to an operation requiring chordality; carries a hole
struct non_chordal_error : validation_error {
    non_chordal_error(const std::string& msg, std::vector<int> hole_arg)
        : validation_error(msg), hole(std::move(hole_arg)) {}
    std::vector<int> hole;
};

}  // namespace ccw
