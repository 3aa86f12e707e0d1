#pragma once

#include "nlsdbar/reflection.hpp"
#include "nlsdbar/types.hpp"

namespace nlsdbar {

/// nu = -(1/2pi) log(1 - |r0|^2). Throws DomainError for |r0| >= 1.
double nu(cplx r_at_z0);

/// Regularised Cauchy integral
///   beta(z, z0) = (1/2pi i) int_{-inf}^{z0} [w(s) - w(z0) chi(s) (s - z0 + 1)] / (s - z) ds,
/// w = log(1 - |r|^2), chi the indicator of (z0 - 1, z0). Defined for z off
/// (-inf, z0), including z = z0. Throws DomainError for real z < z0.
cplx beta(cplx z, double z0, const ReflectionCoefficient& r);

enum class GammaMethod { direct, decomposed };

/// gamma(z) = (1/2pi i) int_{-inf}^{z0} w(s) / (s - z) ds.
///   direct:     the integral itself
///   decomposed: beta + i nu (1 + (zeta + 1)(log zeta - log(zeta + 1))), zeta = z - z0
/// Both are valid off (-inf, z0]; decomposed stays accurate near the cut.
cplx gamma(cplx z, double z0, const ReflectionCoefficient& r, GammaMethod method);

/// Chooses decomposed within distance 1e-2 of (-inf, z0], direct elsewhere.
cplx gamma(cplx z, double z0, const ReflectionCoefficient& r);

/// delta = exp(gamma). Real z is accepted only for z > z0.
cplx delta(cplx z, double z0, const ReflectionCoefficient& r);

struct BoundaryValues {
  cplx plus;
  cplx minus;
};

/// delta_+(x), delta_-(x) from the principal-value integral. Throws
/// DomainError at x = z0.
BoundaryValues delta_boundary(double x, double z0, const ReflectionCoefficient& r);

struct PhaseEvaluation {
  cplx z;
  cplx beta_val;
  cplx gamma_val;
  cplx delta_val;
};

PhaseEvaluation evaluate_phase(cplx z, double z0, const ReflectionCoefficient& r);

struct AsymptoticCoefficient {
  double z0 = 0.0;
  double nu = 0.0;
  double arg_alpha = 0.0;
  cplx alpha{0.0};

  /// alpha = sqrt(nu/2) e^{i arg_alpha}.
  static AsymptoticCoefficient make(double z0, double nu, double arg_alpha);
};

/// arg alpha(z0) = (1/pi) int log(z0 - s) w'(s) ds + pi/4 + arg Gamma(i nu) - arg r(z0).
/// The integral runs over a mesh graded geometrically toward z0 with fixed
/// Gauss rules per panel; `refine` splits every panel into 2^refine pieces.
/// Throws DegenerateAmplitude if r(z0) = 0.
double arg_alpha(double z0, const ReflectionCoefficient& r, int refine = 0);

AsymptoticCoefficient asymptotic_coefficient(double z0, const ReflectionCoefficient& r,
                                             int refine = 0);

}  // namespace nlsdbar
