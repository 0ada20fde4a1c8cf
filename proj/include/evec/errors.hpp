#pragma once

#include <stdexcept>
#include <string>

namespace evec {

// Malformed instance text. Carries the 1-based line number when known.
// CLI exit code 1.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg
                                      : msg),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_ = 0;
};

// Bad argument or violated precondition: vertex out of range, cyclic input
// where an acyclic digraph is required, rank vector of the wrong length,
// size cap exceeded. CLI exit code 2.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A mathematically guaranteed invariant failed. This signals a bug in the
// library, never a bad input. CLI exit code 3.
class property_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace evec
