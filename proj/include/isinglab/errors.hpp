#pragma once

#include <stdexcept>
#include <string>

namespace isinglab {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (edge lists, graph6, complex literals).
struct ParseError : Error {
    ParseError(const std::string& what, int line = -1)
        : Error(line >= 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_number(line) {}
    int line_number;
};

// An enumeration cap would be exceeded.
struct SizeError : Error {
    using Error::Error;
};

// Structurally invalid operation (contracting a loop, pole inputs, ...).
struct InvalidMoveError : Error {
    using Error::Error;
};

// Bad argument combinations (v in U, d*n odd, radius out of range, ...).
struct ArgumentError : Error {
    using Error::Error;
};

// Iterative solver failed to certify within its iteration cap.
struct ConvergenceError : Error {
    using Error::Error;
};

}  // namespace isinglab
