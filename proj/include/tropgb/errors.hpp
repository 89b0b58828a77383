#pragma once

#include <stdexcept>
#include <string>

namespace tropgb {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mixing scalars from different backends or different primes.
class BackendError : public Error {
public:
    using Error::Error;
};

/// Mathematically invalid input (zero generator, non-homogeneous polynomial,
/// division by exact zero, dimension mismatch, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Raised whenever finite precision is insufficient to certify a decision:
/// comparing terms, choosing a pivot, or dividing by a value that is
/// indistinguishable from zero.
class PrecisionError : public Error {
public:
    explicit PrecisionError(const std::string& msg, int degree = -1, int step = -1)
        : Error(msg), degree_(degree), step_(step) {}

    /// Degree d of the matrix being reduced when the failure occurred, or -1.
    int degree() const { return degree_; }
    /// Generator step i of the failure location, or -1.
    int step() const { return step_; }

private:
    int degree_;
    int step_;
};

/// An exhaustive enumeration exceeded its size guard.
class GuardError : public Error {
public:
    using Error::Error;
};

/// Syntax error with source position (1-based line/column).
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace tropgb
