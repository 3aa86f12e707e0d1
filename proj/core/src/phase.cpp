#include "nlsdbar/phase.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <vector>

#include "nlsdbar/error.hpp"
#include "nlsdbar/quadrature.hpp"
#include "nlsdbar/special.hpp"

namespace nlsdbar {

namespace {

constexpr double kAbsTol = 1e-12;
constexpr double kRelTol = 1e-13;
constexpr double kNearCut = 1e-2;

// Sorted breaks with near-duplicates of `keep` removed, so no panel is
// narrower than rounding.
std::vector<double> tidy(std::vector<double> b, double keep) {
  std::sort(b.begin(), b.end());
  const double eps = 1e-13 * std::max(1.0, std::abs(b.back() - b.front()));
  std::vector<double> out;
  for (double x : b) {
    if (x != keep && std::abs(x - keep) < eps) continue;
    if (!out.empty() && x - out.back() < eps) {
      if (x == keep) out.back() = keep;
      continue;
    }
    out.push_back(x);
  }
  return out;
}

// Grid nodes strictly inside (lo, hi), the end points, and any extra points in (lo, hi).
std::vector<double> panel_breaks(double lo, double hi, const ReflectionCoefficient& r,
                                 std::initializer_list<double> extra) {
  std::vector<double> b{lo, hi};
  auto first = std::upper_bound(r.z_grid.begin(), r.z_grid.end(), lo);
  for (auto it = first; it != r.z_grid.end() && *it < hi; ++it) b.push_back(*it);
  for (double e : extra)
    if (e > lo && e < hi) b.push_back(e);
  return tidy(std::move(b), lo);
}

// int_a^b ds / (s - z) for z not on [a, b].
cplx log_ratio(double a, double b, cplx z) {
  if (z.imag() != 0.0) return std::log(b - z) - std::log(a - z);
  const double x = z.real();
  return std::log(std::abs(b - x) / std::abs(x - a));
}

// int_lo^hi g(s) / (s - z) ds with g(x) subtracted at x = clamp(Re z). For real z
// inside [lo, hi] the caller guarantees g(x) = 0.
cplx cauchy(const std::function<double(double)>& g, double lo, double hi, cplx z,
            const ReflectionCoefficient& r, std::initializer_list<double> extra) {
  if (!(hi > lo)) return 0.0;
  const double x = std::clamp(z.real(), lo, hi);
  const double gx = g(x);
  auto breaks = panel_breaks(lo, hi, r, extra);
  breaks.push_back(x);
  breaks = tidy(std::move(breaks), x);
  auto f = [&](double s) -> cplx { return s == z ? cplx(0.0) : (g(s) - gx) / (s - z); };
  const auto res = quad::integrate_panels(f, breaks, kAbsTol, kRelTol);
  if (!res.converged) throw NumericalFailure("cauchy integral did not converge", res.error);
  cplx out = res.value;
  if (gx != 0.0) out += gx * log_ratio(lo, hi, z);
  return out;
}

void check_off_cut(cplx z, double z0, const char* who) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError(std::string(who) + ": non-finite argument");
  if (z.imag() == 0.0 && z.real() < z0)
    throw DomainError(std::string(who) + ": z lies on the cut (-inf, z0)");
}

double cut_distance(cplx z, double z0) {
  return z.real() <= z0 ? std::abs(z.imag()) : std::abs(z - z0);
}

cplx gamma_direct(cplx z, double z0, const ReflectionCoefficient& r) {
  check_off_cut(z, z0, "gamma");
  if (z == cplx(z0)) throw DomainError("gamma: logarithmic singularity at z0");
  if (r.is_zero()) return 0.0;
  const double lo = std::min(r.z_min(), z0);
  auto g = [&](double s) { return r.w(s); };
  return cauchy(g, lo, z0, z, r, {}) / (2.0 * pi * I);
}

cplx gamma_decomposed(cplx z, double z0, const ReflectionCoefficient& r) {
  check_off_cut(z, z0, "gamma");
  if (z == cplx(z0)) throw DomainError("gamma: logarithmic singularity at z0");
  if (r.is_zero()) return 0.0;
  const double v = nu(r(z0));
  const cplx zeta = z - z0;
  return beta(z, z0, r) + I * v * (1.0 + (zeta + 1.0) * (std::log(zeta) - std::log(zeta + 1.0)));
}

}  // namespace

double nu(cplx r_at_z0) {
  const double a2 = std::norm(r_at_z0);
  if (!(a2 < 1.0)) throw DomainError("nu: |r(z0)| must be below 1");
  return -std::log1p(-a2) / (2.0 * pi);
}

cplx beta(cplx z, double z0, const ReflectionCoefficient& r) {
  check_off_cut(z, z0, "beta");
  if (r.is_zero()) return 0.0;
  const double w0 = r.w(z0);
  const double lo = std::min(r.z_min(), z0 - 1.0);
  auto g = [&](double s) {
    double v = r.w(s);
    if (s > z0 - 1.0 && s <= z0) v -= w0 * (s - z0 + 1.0);
    return v;
  };
  return cauchy(g, lo, z0, z, r, {z0 - 1.0}) / (2.0 * pi * I);
}

cplx gamma(cplx z, double z0, const ReflectionCoefficient& r, GammaMethod method) {
  return method == GammaMethod::direct ? gamma_direct(z, z0, r) : gamma_decomposed(z, z0, r);
}

cplx gamma(cplx z, double z0, const ReflectionCoefficient& r) {
  return cut_distance(z, z0) < kNearCut ? gamma_decomposed(z, z0, r) : gamma_direct(z, z0, r);
}

cplx delta(cplx z, double z0, const ReflectionCoefficient& r) { return std::exp(gamma(z, z0, r)); }

BoundaryValues delta_boundary(double x, double z0, const ReflectionCoefficient& r) {
  if (x == z0) throw DomainError("delta_boundary: x = z0 is a logarithmic singularity");
  if (x > z0) {
    const cplx d = delta(cplx(x), z0, r);
    return {d, d};
  }
  if (r.is_zero()) return {1.0, 1.0};
  const double lo = std::min(r.z_min(), z0);
  cplx pv = 0.0;
  double wx = 0.0;
  if (z0 > lo) {
    wx = (x >= lo) ? r.w(x) : 0.0;
    auto f = [&](double s) -> double { return s == x ? 0.0 : (r.w(s) - wx) / (s - x); };
    auto breaks = panel_breaks(lo, z0, r, {});
    breaks.push_back(x);
    breaks = tidy(std::move(breaks), x);
    const auto res = quad::integrate_panels(f, breaks, kAbsTol, kRelTol);
    if (!res.converged) throw NumericalFailure("delta_boundary: PV integral did not converge", res.error);
    pv = res.value;
    if (wx != 0.0) pv += wx * std::log((z0 - x) / (x - lo));
  }
  const cplx core = pv / (2.0 * pi * I);
  return {std::exp(core + 0.5 * wx), std::exp(core - 0.5 * wx)};
}

PhaseEvaluation evaluate_phase(cplx z, double z0, const ReflectionCoefficient& r) {
  PhaseEvaluation e;
  e.z = z;
  e.beta_val = beta(z, z0, r);
  e.gamma_val = gamma(z, z0, r);
  e.delta_val = std::exp(e.gamma_val);
  return e;
}

AsymptoticCoefficient AsymptoticCoefficient::make(double z0, double nu_val, double arg) {
  AsymptoticCoefficient c;
  c.z0 = z0;
  c.nu = nu_val;
  c.arg_alpha = arg;
  c.alpha = std::polar(std::sqrt(0.5 * nu_val), arg);
  return c;
}

double arg_alpha(double z0, const ReflectionCoefficient& r, int refine) {
  const cplx r0 = r(z0);
  if (std::abs(r0) == 0.0) throw DegenerateAmplitude("arg_alpha: r(z0) = 0");
  if (refine < 0 || refine > 8) throw DomainError("arg_alpha: refine must be in [0, 8]");
  const double v = nu(r0);

  double stieltjes = 0.0;
  const double lo = r.z_min();
  if (z0 > lo) {
    std::vector<double> breaks = panel_breaks(lo, z0, r, {});
    const double d = std::min(1.0, z0 - lo);
    for (int k = 0; k <= 60; ++k) {
      const double s = z0 - d * std::ldexp(1.0, -k);
      if (s > lo && s < z0) breaks.push_back(s);
    }
    breaks = tidy(std::move(breaks), z0);
    auto f = [&](double s) { return std::log(z0 - s) * r.w_prime(s); };
    const int pieces = 1 << refine;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
      const double h = (breaks[i + 1] - breaks[i]) / pieces;
      for (int p = 0; p < pieces; ++p) {
        const double a = breaks[i] + p * h;
        stieltjes += quad::fixed_gauss(f, a, a + h, 12);
      }
    }
  }
  const double arg = stieltjes / pi + pi / 4.0 + log_gamma(cplx(0.0, v)).imag() - std::arg(r0);
  return std::remainder(arg, 2.0 * pi);
}

AsymptoticCoefficient asymptotic_coefficient(double z0, const ReflectionCoefficient& r,
                                             int refine) {
  return AsymptoticCoefficient::make(z0, nu(r(z0)), arg_alpha(z0, r, refine));
}

}  // namespace nlsdbar
