#ifndef POLYGAUSS_ERRORS_HPP
#define POLYGAUSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polygauss {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad argument: ring mismatch, zero denominator, wrong-size permutation, ...
struct InvalidArgumentError : Error {
    explicit InvalidArgumentError(const std::string& msg) : Error(msg) {}
};

struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& msg) : Error(msg) {}
};

// Raised when a Groebner computation exceeds the configured generator or
// term budget.  Mapped to exit code 3 by the CLI.
struct ResourceLimitError : Error {
    explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

// Operation not available for the given ring (e.g. fractional ideals over a
// ring not flagged as a domain).
struct UnsupportedError : Error {
    explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

// Quotient presentation collapses to the zero ring.
struct TrivialRingError : Error {
    explicit TrivialRingError(const std::string& msg) : Error(msg) {}
};

// Finite-colength precondition failed for a local computation.
struct UnsupportedInputError : Error {
    explicit UnsupportedInputError(const std::string& msg) : Error(msg) {}
};

// Syntax error in the ring/polynomial grammar; carries source position.
struct ParseError : Error {
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line;
    int column;
};

}  // namespace polygauss

#endif
