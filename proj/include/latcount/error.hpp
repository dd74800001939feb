#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latcount {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a mathematical precondition (singular basis, unbounded
/// polyhedron, rank-deficient constraint matrix, ...).
class SemanticError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. Carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace latcount
