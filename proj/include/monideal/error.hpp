#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monideal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The zero ideal was passed to an operation that needs a nonzero ideal.
class ZeroIdealError : public Error {
public:
    ZeroIdealError() : Error("operation requires a nonzero ideal (got the zero ideal)") {}
};

/// The unit ideal was passed to an operation that needs a proper ideal.
class UnitIdealError : public Error {
public:
    UnitIdealError() : Error("operation requires a proper ideal (got the unit ideal)") {}
};

/// A documented precondition of an operation does not hold for its input.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A configured size cap (subset enumeration, shelling search, matrix width) was hit.
class CutoffExceeded : public Error {
public:
    using Error::Error;
};

/// Two computation paths that must agree did not. Always a bug or a finding.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Malformed ideal or binomial text, with a 1-based position.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace monideal
