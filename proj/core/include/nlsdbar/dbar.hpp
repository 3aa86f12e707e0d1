#pragma once

#include <vector>

#include "nlsdbar/fit.hpp"
#include "nlsdbar/reflection.hpp"
#include "nlsdbar/types.hpp"

namespace nlsdbar {

/// The four sectors carrying a non-analytic extension. Angles are principal
/// args of z - z0:
///   omega1 [0, pi/4]    omega3 [3pi/4, pi]
///   omega4 [-pi, -3pi/4]  omega6 [-pi/4, 0]
enum class Sector { omega1, omega3, omega4, omega6 };

/// z = z0 + u + i v.
struct SectorPoint {
  double u = 0.0;
  double v = 0.0;
  Sector sector = Sector::omega1;

  /// phi in [0, pi/4] is the angle from the sector's real-axis edge.
  static SectorPoint from_polar(Sector sector, double radius, double phi);

  double radius() const;
  /// Angle from the real-axis edge; throws DomainError outside the sector.
  double edge_angle() const;
};

enum class DbarMethod { analytic, finite_difference };

/// Extension data for one (z0, r): caches r_hat0 and nu.
///
/// In each sector R = b h(z0 + u) + (1 - b) f(z), b = cos(2 phi), with
///   omega1: h = r,                 f = rh (z-z0)^{-2i nu} delta^2
///   omega3: h = -conj r/(1-|r|^2),  f = -conj rh/(1-|rh|^2) (z-z0)^{2i nu} delta^{-2}
///   omega4: h = r/(1-|r|^2),        f = rh/(1-|rh|^2) (z-z0)^{-2i nu} delta^2
///   omega6: h = conj r,             f = conj rh (z-z0)^{2i nu} delta^{-2}
/// so R = h on the real axis and R = f on the diagonal ray.
class ExtensionModel {
 public:
  ExtensionModel(double z0, const ReflectionCoefficient& r);

  double z0() const { return z0_; }
  double nu() const { return nu_; }
  cplx rhat0() const { return rhat0_; }
  const ReflectionCoefficient& reflection() const { return *r_; }

  /// Ray function of the sector; throws DomainError at z = z0.
  cplx f(Sector s, cplx z) const;
  /// Real-axis data of the sector and its derivative.
  cplx h(Sector s, double x) const;
  cplx h_prime(Sector s, double x) const;

  cplx extension(const SectorPoint& p) const;

  /// Analytic: (h - f) dbar(b) + b h'/2 with dbar(b) = -+ i sin(2 phi) / conj(z - z0).
  /// Finite difference: (d_u + i d_v)/2 of extension() with central step `step`.
  /// Throws DomainError when the point or its stencil leaves the open sector.
  cplx dbar(const SectorPoint& p, DbarMethod method, double step = 1e-4) const;

 private:
  double z0_;
  const ReflectionCoefficient* r_;
  cplx rhat0_;
  double nu_;
};

/// Single-call forms for sector omega1.
cplx f1(cplx z, double z0, const ReflectionCoefficient& r);
cplx extension_R1(const SectorPoint& p, double z0, const ReflectionCoefficient& r);
cplx dbar_R1(const SectorPoint& p, double z0, const ReflectionCoefficient& r, DbarMethod method,
             double step = 1e-4);

/// Constants in |dbar R1| <= c1 |z - z0|^{-1/2} + c2 |r'|, taken as the sample
/// maxima of |h - f| |sin 2phi| |z - z0|^{-1/2} and |b|/2 over a polar grid
/// with n_radius geometric radii in [radius_min, radius_max] and n_angle
/// interior angles. max_ratio is the largest |dbar R1| / bound on the grid.
struct BoundConstants {
  double c1 = 0.0;
  double c2 = 0.0;
  double max_ratio = 0.0;
  std::size_t points = 0;
};

BoundConstants fit_dbar_bound(const ExtensionModel& model, double radius_min, double radius_max,
                              std::size_t n_radius, std::size_t n_angle,
                              Sector sector = Sector::omega1);

/// Sector integrals over u >= v >= 0 (s = z0 + u + i v) with weight e^{-tuv}:
///   I1 = int |r'(z0+u)| / |s - z|,   I2 = int |s - z0|^{-1/2} / |s - z|,
///   I3 = int |r'(z0+u)|,             I4 = int |s - z0|^{-1/2}.
/// The u range stops where e^{-tuv} < 1e-16; I2 and I4 are also capped at
/// u <= 1e6 (with the analytic tail added for I4). Both variables are
/// integrated in log scale with adaptive Gauss-Kronrod.
/// Probes must lie outside the closed region (Re(z - z0) < Im(z - z0)), since
/// the nested quadrature cannot resolve a point singularity inside it.
/// Throws NumericalFailure if the quadrature does not converge.
double decay_integral_I1(double t, cplx z_probe, double z0, const ReflectionCoefficient& r);
double decay_integral_I2(double t, cplx z_probe, double z0);
double decay_integral_I3(double t, double z0, const ReflectionCoefficient& r);
double decay_integral_I4(double t, double z0);

/// z0 + i b for b in {1e-2, 1e-3, 1e-4, 1e-5}, plus z0 - 1e-3 + 5e-4 i.
std::vector<cplx> default_probes(double z0);

/// I1, I2 reported as the max over the probe set; fits over ts.
struct DecaySweep {
  std::vector<double> ts;
  std::vector<double> I1, I2, I3, I4;
  DecayFit fit1, fit2, fit3, fit4;
};

DecaySweep decay_sweep(const std::vector<double>& ts, double z0, const ReflectionCoefficient& r,
                       const std::vector<cplx>& probes);

/// Reflection data of minimal regularity at z0:
///   r(z) = A e^{-u^2} (1 + |u|^p),  u = z - z0,  0 < p < 1,
/// so r' ~ |u|^{p-1} is square integrable but unbounded. The grid is graded
/// geometrically toward z0 (spacing down to 1e-6) and r' is sampled exactly.
ReflectionCoefficient rough_reflection(double z0, double amplitude = 0.5, double p = 0.55);

}  // namespace nlsdbar
