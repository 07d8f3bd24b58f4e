#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scalelaw {

/// Base of every error raised by the library. The CLI maps these to exit 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument does not hold (p < 1, fraction outside [0,1], ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A serial fraction was passed to an operation expecting a different frame.
class FrameMismatch : public Error {
public:
    using Error::Error;
};

/// Measurements the two-part model cannot produce (superlinear speedup, slowdown).
class ModelViolation : public Error {
public:
    using Error::Error;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

/// Internal invariant broken; indicates a bug rather than bad input.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (CSV, command-line values). The CLI maps these to exit 2.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyInput : public ParseError {
public:
    EmptyInput() : ParseError("empty input: no header row") {}
};

class SchemaError : public ParseError {
public:
    explicit SchemaError(const std::string& column)
        : ParseError("schema error: missing column " + column), column_(column) {}

    const std::string& column() const noexcept { return column_; }

private:
    std::string column_;
};

class RowError : public ParseError {
public:
    RowError(std::size_t row, const std::string& what)
        : ParseError("row error at row " + std::to_string(row) + ": " + what), row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

}  // namespace scalelaw
