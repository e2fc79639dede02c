#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quadpow {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated operation precondition (wrong degree, bad parameter range, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Division by a nonzero zero divisor of a reducible quotient ring.
/// `factor` is the serialized nontrivial factor of the modulus that was found.
class ZeroDivisorError : public Error {
 public:
  explicit ZeroDivisorError(std::string factor)
      : Error("division by a zero divisor; modulus has factor " + factor), factor_(std::move(factor)) {}
  const std::string& factor() const { return factor_; }

 private:
  std::string factor_;
};

class IncompatibleModulus : public Error {
 public:
  IncompatibleModulus() : Error("scalars carry different adjoined-root moduli") {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " + message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace quadpow
