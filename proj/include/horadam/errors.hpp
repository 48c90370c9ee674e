#pragma once

#include <stdexcept>
#include <string>

namespace horadam {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  using Error::Error;
};

/// Operands that must share a context (e.g. the discriminant of Q(sqrt D)) do not.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Root-based code paths require r^2 + 4s > 0.
class OutOfHypothesis : public Error {
 public:
  using Error::Error;
};

/// Negative indices need s != 0 to run the recurrence backwards.
class BackwardExtensionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class DegenerateEigenbasis : public Error {
 public:
  using Error::Error;
};

class PatternNotSupported : public Error {
 public:
  using Error::Error;
};

/// Parameters fall outside the validity domain of a construction.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace horadam
