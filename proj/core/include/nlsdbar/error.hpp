#pragma once

#include <stdexcept>
#include <string>

namespace nlsdbar {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (branch cut,
/// pole, wrong half-plane, |r| >= 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The leading asymptotic term vanishes because r(z0) = 0; arg(alpha) is
/// undefined.
class DegenerateAmplitude : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A quadrature, integrator or series failed to reach its tolerance.
class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& what, double estimate)
      : Error(what), estimate_(estimate) {}
  explicit NumericalFailure(const std::string& what) : NumericalFailure(what, 0.0) {}

  /// Best value or error estimate reached before giving up.
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

/// A data invariant (unitarity, sup|r| < 1, decayed boundary samples) is broken.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Result would overflow double precision.
class RangeError : public Error {
 public:
  RangeError(const std::string& what, double threshold) : Error(what), threshold_(threshold) {}
  double threshold() const noexcept { return threshold_; }

 private:
  double threshold_;
};

/// The periodic evolution window is too small; radiation reached the edge.
class WindowTooSmall : public Error {
 public:
  WindowTooSmall(const std::string& what, double required_half_width)
      : Error(what), required_half_width_(required_half_width) {}
  double required_half_width() const noexcept { return required_half_width_; }

 private:
  double required_half_width_;
};

}  // namespace nlsdbar
