#pragma once

#include <stdexcept>
#include <string>

namespace partial_hopf {

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

/// Two scalars live in different cyclotomic fields.
class OrderMismatch : public Error {
 public:
  OrderMismatch(int lhs, int rhs)
      : Error("scalar field mismatch: Q(zeta_" + std::to_string(lhs) + ") vs Q(zeta_" +
              std::to_string(rhs) + ")") {}
  explicit OrderMismatch(const std::string& what) : Error(what) {}
};

/// Operands belong to different Hopf algebras.
class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

class NotADivisor : public Error {
 public:
  NotADivisor(int k, int n)
      : Error(std::to_string(k) + " does not divide " + std::to_string(n)) {}
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class NonCyclicGrouplikes : public Error {
 public:
  using Error::Error;
};

class BranchLimitExceeded : public Error {
 public:
  explicit BranchLimitExceeded(std::size_t cap)
      : Error("branch limit of " + std::to_string(cap) + " exceeded") {}
};

/// Malformed expression string or JSON document.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace partial_hopf
