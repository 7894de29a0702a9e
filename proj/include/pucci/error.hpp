#pragma once

#include <stdexcept>
#include <string>

namespace pucci {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite or otherwise malformed numeric input.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Model parameter outside its admissible range (omega, gamma, a, delta...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Evaluation point outside the support of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Quadrature or other numerical routine failed to reach its tolerance.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

class GridError : public Error {
 public:
  using Error::Error;
};

class MonotonicityError : public Error {
 public:
  using Error::Error;
};

/// Policy iteration stalled or exceeded its iteration budget.
class IterationError : public Error {
 public:
  using Error::Error;
};

/// Operation requested for a domain without a closed-form witness.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace pucci
