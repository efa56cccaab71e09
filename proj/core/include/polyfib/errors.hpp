#ifndef POLYFIB_ERRORS_HPP
#define POLYFIB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyfib {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the region where an operation is defined or supported.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a pole (z = 1 for rational polylogs, zero denominators).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Direct summation requested outside the region of absolute convergence.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Closed form requested for a parameter parity it does not cover.
class ParityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A summation or extrapolation could not reach the requested accuracy.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class PrecisionError : public Error {
 public:
  using Error::Error;
};

class UnknownIdError : public Error {
 public:
  using Error::Error;
};

}  // namespace polyfib

#endif  // POLYFIB_ERRORS_HPP
