#pragma once

#include <stdexcept>
#include <string>

namespace arrcheck {

// Base of every error thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad call: mismatched fields, malformed expressions, out-of-range arguments.
// Maps to exit code 1 in the CLI.
struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(what) {}
};

// Syntax error with a 0-based position into the offending text.
struct ParseError : UsageError {
    ParseError(const std::string& what, std::size_t position)
        : UsageError(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

// Structurally invalid arrangement: empty, proportional lines, zero forms,
// degenerate family parameter. Maps to exit code 2.
struct InvalidArrangementError : Error {
    explicit InvalidArrangementError(const std::string& what) : Error(what) {}
};

// A configured resource bound was hit (generator-search degree, rational
// function degree cap). Maps to exit code 3.
struct BoundExceededError : Error {
    explicit BoundExceededError(const std::string& what) : Error(what) {}
};

// Two independent routes to the same quantity disagreed. Never silent;
// indicates a defect in the library itself. Maps to exit code 4.
struct InternalCheckError : Error {
    explicit InternalCheckError(const std::string& what) : Error(what) {}
};

}  // namespace arrcheck
