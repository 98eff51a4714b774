#pragma once

#include <stdexcept>
#include <string>

namespace ohpade {

// Root of every exception the library throws. The CLI maps the subclasses
// onto its exit codes (configuration problems vs. numerical failures).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the region where the operation is defined
// (e.g. Φ evaluated strictly inside the unit disk).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A caller-supplied parameter violates a precondition.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class UnsupportedInputError : public Error {
 public:
  using Error::Error;
};

// A numerical procedure did not reach its tolerance. `achieved` carries the
// best residual obtained, when one is meaningful.
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what, double achieved = 0.0)
      : Error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

class DegenerateSystemError : public NumericError {
 public:
  using NumericError::NumericError;
};

class InsufficientDataError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace ohpade
