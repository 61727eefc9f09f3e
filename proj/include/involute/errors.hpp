#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace involute {

// Base class for everything this library throws on purpose, so callers
// (notably the CLI) can map failures to exit codes in one place.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two monomials/polynomials built over different variable contexts met in
// one operation.
struct ContextMismatch : Error {
    using Error::Error;
};

// Checked exponent arithmetic overflowed.
struct OverflowError : Error {
    using Error::Error;
};

// Bad input text. line/column are 1-based; column 0 means "whole line".
struct ParseError : Error {
    std::size_t line;
    std::size_t column;

    ParseError(std::size_t line_, std::size_t column_, const std::string& what)
        : Error("parse error at line " + std::to_string(line_) +
                (column_ ? ":" + std::to_string(column_) : std::string()) + ": " + what),
          line(line_),
          column(column_) {}
};

}  // namespace involute
