#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tdqe {

// Base of every exception thrown by the library. The CLI maps the concrete
// subclasses onto its exit-code table.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class InvalidDecomposition : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class MixedModeError : public Error {
 public:
  using Error::Error;
};

class MissingAssignment : public Error {
 public:
  using Error::Error;
};

// Precondition failures of the polynomial layer.
class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class DegreeTooLow : public Error {
 public:
  using Error::Error;
};

// Raised by the polynomial layer; InexactDivision means an algebraic identity
// that must hold did not, which is a bug rather than bad input.
class AlgebraError : public Error {
 public:
  using Error::Error;
};

class InexactDivision : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

}  // namespace tdqe
