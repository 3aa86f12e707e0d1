#pragma once

#include <vector>

#include "nlsdbar/matrix2.hpp"
#include "nlsdbar/types.hpp"

namespace nlsdbar {

/// Which version of the parabolic-cylinder model solution to build.
///   corrected:  beta21 = nu / beta12, P = Psi T E with the region factors below
///   as_printed: beta21 = beta12 / nu, P = Psi E T, Omega4 factor upper(r0/(1-|r0|^2))
/// where E = diag(e^{i xi^2/4} xi^{-i nu}, e^{-i xi^2/4} xi^{i nu}). Only the
/// corrected form satisfies the jump conditions; as_printed is kept so the
/// test suite can show that.
enum class Transcription { corrected, as_printed };

struct ModelParams {
  cplx r0{0.0};
  double nu = 0.0;
  cplx beta12{0.0};
  cplx beta21{0.0};
  Transcription transcription = Transcription::corrected;

  /// Throws DomainError unless |r0| < 1.
  static ModelParams make(cplx r0, Transcription t = Transcription::corrected);
  bool degenerate() const { return r0 == cplx(0.0); }
};

/// Psi^{+} for Im xi > 0, Psi^{-} for Im xi < 0. Each column solves
///   Psi' = (-i xi sigma3 / 2 + [[0, beta12], [beta21, 0]]) Psi.
/// Real xi is accepted as the boundary value from the matching half-plane.
Matrix2C psi_plus(cplx xi, const ModelParams& p);
Matrix2C psi_minus(cplx xi, const ModelParams& p);

/// Region 1..6 of xi by arg in [0, 2pi). Throws DomainError at 0 or on a ray
/// of Sigma_P (arg = pi/4, 3pi/4, 5pi/4, 7pi/4).
int region_of(cplx xi);

/// P(xi) off the rays.
Matrix2C model_P(cplx xi, const ModelParams& p);

/// The region formula for P evaluated at xi, which may sit on the region's
/// boundary. This gives the one-sided limits on the rays and on the real axis.
/// Regions 1-3 take arg xi in [0, pi], regions 4-6 arg xi in [-pi, 0].
Matrix2C model_P_in_region(cplx xi, int region, const ModelParams& p);

/// Ray 1..4 at angle (2k - 1) pi / 4. The + side is Omega2 for rays 1 and 2,
/// Omega4 for ray 3 and Omega6 for ray 4.
double ray_angle(int ray);
int ray_plus_region(int ray);
int ray_minus_region(int ray);

/// Jump matrix on ray `ray` at the point xi = radius e^{i angle}.
Matrix2C jump_VP(int ray, double radius, const ModelParams& p);
/// Ray detected from arg xi; throws DomainError if xi is off Sigma_P.
Matrix2C jump_VP(cplx xi, const ModelParams& p);

/// Coefficient of 1/xi in P at infinity: [[0, -i beta12], [i beta21, 0]].
/// Zero matrix when r0 = 0.
Matrix2C p1_infinity(const ModelParams& p);

/// || P_+ - P_- V_P || (Frobenius) at radius on ray.
double jump_residual(int ray, double radius, const ModelParams& p);

/// || P(x + i0) - P(x - i0) || for real x != 0.
double real_axis_residual(double x, const ModelParams& p);

/// || xi (P(xi) - I) - P1 ||.
double large_xi_residual(cplx xi, const ModelParams& p);

}  // namespace nlsdbar
