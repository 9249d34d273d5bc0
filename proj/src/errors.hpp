#ifndef BIPLANAR_ERRORS_HPP
#define BIPLANAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace biplanar {

// Bad argument / precondition violation.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file. line is 1-based, 0 when not tied to a line.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& msg)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
          line(line_) {}
};

// Degenerate configuration (collinear overlap, touching segments, ...).
struct geometry_error : std::runtime_error {
    explicit geometry_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Layout search could not produce a usable drawing.
struct search_error : std::runtime_error {
    explicit search_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Certificate assembly failed (coverage or recount mismatch).
struct certificate_error : std::runtime_error {
    explicit certificate_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency failure in a constructor that must not fail.
struct construction_error : std::runtime_error {
    explicit construction_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace biplanar

#endif
