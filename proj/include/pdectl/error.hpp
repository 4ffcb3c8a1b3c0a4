#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdectl {

/// Operands live in different rings or free modules (variable count or rank mismatch).
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input is outside the fragment an operation decides (e.g. non-free module
/// where freeness is a hypothesis).
class UnsupportedCase : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A question outside the decidable fragment (S' closures of higher-dimensional
/// torsion). Raised only by predicates; closures report it as a value.
class Undecidable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace pdectl
