#pragma once

#include <stdexcept>
#include <string>

namespace splitegh {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in rings (or degrees) that do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument does not hold.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// The requested Hilbert function cannot be attained by a monomial ideal
/// of the required shape (mathematical infeasibility, not a bug).
class NotRealizableError : public Error {
 public:
  using Error::Error;
};

/// An invariant that the construction guarantees was observed to fail.
/// The message carries the trace collected up to the failure.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace splitegh
