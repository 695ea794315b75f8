#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uqsl3 {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// A Scalar could not be specialized because its denominator vanishes at the
/// evaluation point.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Violated precondition on an argument (kappa = 0, q0 = +-1, empty degree...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A bounded search could not decide the question it was asked.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace uqsl3
