#pragma once

#include <stdexcept>
#include <string>

namespace nml {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside the domain of an operation (non-positive
/// coupling, negative time, order out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined for this input, e.g. a spectral density
/// requested for a kernel without a closed form.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// The time stepper left the physical region |C| <= 1.
class NumericalInstabilityError : public Error {
 public:
  using Error::Error;
};

/// Evaluation too close to a pole of a dissipator.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, double location);
  double location() const noexcept { return location_; }

 private:
  double location_;
};

/// Reading or writing a result file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace nml
