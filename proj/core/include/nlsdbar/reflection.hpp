#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nlsdbar/types.hpp"

namespace nlsdbar {

/// Reflection coefficient sampled on a strictly increasing spectral grid.
///
/// Off-grid values come from the piecewise cubic Hermite interpolant through
/// (r, r') at the nodes; r is taken to vanish outside [z_grid.front(), z_grid.back()].
/// Every consumer (phase integrals, model coefficients, the extension R1) goes
/// through the same interpolant.
struct ReflectionCoefficient {
  std::vector<double> z_grid;
  std::vector<cplx> r;
  std::vector<cplx> r_prime;
  double rho = 0.0;  // max |r| over the samples
  std::vector<std::string> warnings;

  /// Samples with r' from second-order finite differences (three-point
  /// centred inside, one-sided at the ends). Throws InvariantViolation if
  /// rho >= 1; warns if rho > 0.99 or the end samples exceed decay_tol.
  static ReflectionCoefficient from_samples(std::vector<double> z, std::vector<cplx> r,
                                            double decay_tol = 1e-8);

  /// As from_samples, with r' supplied by the caller.
  static ReflectionCoefficient with_derivative(std::vector<double> z, std::vector<cplx> r,
                                               std::vector<cplx> r_prime,
                                               double decay_tol = 1e-8);

  /// r = 0 on a three-point grid over [-8, 8].
  static ReflectionCoefficient zero();

  bool is_zero() const { return rho == 0.0; }
  double z_min() const { return z_grid.front(); }
  double z_max() const { return z_grid.back(); }

  cplx operator()(double s) const;
  cplx derivative(double s) const;
  /// Both at once; cheaper than two lookups.
  void eval(double s, cplx& value, cplx& deriv) const;

  /// w(s) = log(1 - |r(s)|^2) and its derivative.
  double w(double s) const;
  double w_prime(double s) const;

  /// Index k with z_grid[k] <= s < z_grid[k+1], clamped to the last cell.
  std::size_t cell(double s) const;
};

/// Second-order nonuniform finite-difference derivative of samples f on z.
std::vector<cplx> finite_difference_derivative(const std::vector<double>& z,
                                               const std::vector<cplx>& f);

/// n equally spaced points from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace nlsdbar
