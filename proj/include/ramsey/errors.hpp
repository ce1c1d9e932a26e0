#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument or violated precondition.
struct parameter_error : error {
    using error::error;
};

// A configured budget (nodes, subsets, vertices, memory) was exceeded.
// Operations throw this instead of returning a truncated or wrong result.
struct resource_error : error {
    using error::error;
};

// Text-format violation; carries the 1-based line number.
struct parse_error : error {
    int line;
    parse_error(const std::string& msg, int line_no)
        : error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

// A numerical routine failed to reach its tolerance.
struct numeric_error : error {
    using error::error;
};

}  // namespace ramsey
