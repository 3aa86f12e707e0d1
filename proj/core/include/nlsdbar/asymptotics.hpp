#pragma once

#include <vector>

#include "nlsdbar/phase.hpp"
#include "nlsdbar/reflection.hpp"
#include "nlsdbar/types.hpp"

namespace nlsdbar {

/// Stationary-phase frame: z0 = -x / (4t).
struct AsymptoticFrame {
  double x = 0.0;
  double t = 1.0;
  double z0 = 0.0;

  /// Throws DomainError unless t > 0.
  static AsymptoticFrame make(double x, double t);
};

enum class Route { closed_form, model };

struct LeadingTerm {
  cplx q{0.0};
  double nu = 0.0;
  bool degenerate = false;  // r(z0) = 0; q is set to 0
  bool untrusted = false;   // t below t_min
};

/// r_hat0 = r(z0) exp(-2i nu - 2 beta(z0, z0)).
cplx rhat0(double z0, const ReflectionCoefficient& r);

/// t^{-1/2} alpha(z0) exp(i x^2/(4t) - i nu log 8t), alpha from asymptotic_coefficient.
LeadingTerm leading_q(const AsymptoticFrame& frame, const ReflectionCoefficient& r,
                      double t_min = 1.0);

/// 2i (P1)_12 / sqrt(8t), with P1 built from r0 = r_hat0 e^{i nu ln 8t - 4 i t z0^2}.
LeadingTerm leading_q_via_model(const AsymptoticFrame& frame, const ReflectionCoefficient& r,
                                double t_min = 1.0);

LeadingTerm leading_q(const AsymptoticFrame& frame, const ReflectionCoefficient& r, Route route,
                      double t_min = 1.0);

struct AsymptoticSample {
  double x;
  double t;
  double z0;
  double nu;
  cplx q;
  Route route;
  bool degenerate;
  bool untrusted;
};

/// Every (x, t) pair by the given route, evaluated in parallel.
std::vector<AsymptoticSample> asymptotic_table(const std::vector<double>& xs,
                                               const std::vector<double>& ts,
                                               const ReflectionCoefficient& r, Route route,
                                               double t_min = 1.0);

}  // namespace nlsdbar
