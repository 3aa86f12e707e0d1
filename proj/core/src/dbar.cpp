#include "nlsdbar/dbar.hpp"

#include <algorithm>
#include <cmath>

#include "nlsdbar/asymptotics.hpp"
#include "nlsdbar/error.hpp"
#include "nlsdbar/parallel.hpp"
#include "nlsdbar/phase.hpp"
#include "nlsdbar/quadrature.hpp"

namespace nlsdbar {

namespace {

constexpr double kQuarter = pi / 4;
// e^{-x} < 1e-16 beyond this
constexpr double kCutoff = 36.8;
constexpr double kFarCap = 1e6;
// The inner integral is resolved well below the outer tolerance so the outer
// refinement does not chase its noise.
constexpr double kInnerTol = 1e-11;
constexpr double kOuterTol = 1e-8;

// +1 where phi increases with arg(z - z0), -1 where it decreases.
double orientation(Sector s) {
  return (s == Sector::omega1 || s == Sector::omega4) ? 1.0 : -1.0;
}

}  // namespace

SectorPoint SectorPoint::from_polar(Sector sector, double radius, double phi) {
  double theta = phi;
  switch (sector) {
    case Sector::omega1: theta = phi; break;
    case Sector::omega3: theta = pi - phi; break;
    case Sector::omega4: theta = phi - pi; break;
    case Sector::omega6: theta = -phi; break;
  }
  SectorPoint p{radius * std::cos(theta), radius * std::sin(theta), sector};
  // keep the real-axis edge exactly real
  if (phi == 0.0) p.v = 0.0;
  return p;
}

double SectorPoint::radius() const { return std::hypot(u, v); }

double SectorPoint::edge_angle() const {
  if (u == 0.0 && v == 0.0) throw DomainError("SectorPoint: z = z0 has no angle");
  double theta = std::atan2(v, u);
  double phi = 0.0;
  switch (sector) {
    case Sector::omega1: phi = theta; break;
    case Sector::omega3: phi = pi - theta; break;
    case Sector::omega4:
      if (theta > 0) theta -= 2 * pi;  // v = +0 on the negative axis
      phi = theta + pi;
      break;
    case Sector::omega6: phi = -theta; break;
  }
  const double slack = 1e-12;
  if (phi < -slack || phi > kQuarter + slack) throw DomainError("SectorPoint: outside its sector");
  return std::clamp(phi, 0.0, kQuarter);
}

ExtensionModel::ExtensionModel(double z0, const ReflectionCoefficient& r)
    : z0_(z0), r_(&r), rhat0_(nlsdbar::rhat0(z0, r)), nu_(nlsdbar::nu(r(z0))) {}

cplx ExtensionModel::f(Sector s, cplx z) const {
  const cplx zeta = z - z0_;
  if (zeta == cplx(0.0)) throw DomainError("extension: f is singular at z0");
  if (rhat0_ == cplx(0.0)) return 0.0;
  const double m = 1.0 - std::norm(rhat0_);
  const cplx d2 = std::exp(2.0 * gamma(z, z0_, *r_));  // delta^2
  const cplx p = std::exp(-2.0 * I * nu_ * std::log(zeta));  // (z - z0)^{-2i nu}
  switch (s) {
    case Sector::omega1: return rhat0_ * p * d2;
    case Sector::omega3: return -std::conj(rhat0_) / m / (p * d2);
    case Sector::omega4: return rhat0_ / m * p * d2;
    default: return std::conj(rhat0_) / (p * d2);
  }
}

cplx ExtensionModel::h(Sector s, double x) const {
  const cplx v = (*r_)(x);
  const double m = 1.0 - std::norm(v);
  switch (s) {
    case Sector::omega1: return v;
    case Sector::omega3: return -std::conj(v) / m;
    case Sector::omega4: return v / m;
    default: return std::conj(v);
  }
}

cplx ExtensionModel::h_prime(Sector s, double x) const {
  cplx v, d;
  r_->eval(x, v, d);
  const double m = 1.0 - std::norm(v);
  const double dm = -2.0 * std::real(std::conj(v) * d);  // (1 - |r|^2)'
  switch (s) {
    case Sector::omega1: return d;
    case Sector::omega3: return -(std::conj(d) * m - std::conj(v) * dm) / (m * m);
    case Sector::omega4: return (d * m - v * dm) / (m * m);
    default: return std::conj(d);
  }
}

cplx ExtensionModel::extension(const SectorPoint& p) const {
  const double phi = p.edge_angle();
  const double b = std::cos(2.0 * phi);
  const cplx hv = h(p.sector, z0_ + p.u);
  if (b == 1.0) return hv;
  const cplx fv = f(p.sector, cplx(z0_ + p.u, p.v));
  return b * hv + (1.0 - b) * fv;
}

cplx ExtensionModel::dbar(const SectorPoint& p, DbarMethod method, double step) const {
  const double phi = p.edge_angle();
  if (phi <= 0.0 || phi >= kQuarter) throw DomainError("dbar: point must be inside the open sector");
  if (method == DbarMethod::analytic) {
    const double b = std::cos(2.0 * phi);
    const cplx w(p.u, p.v);
    const cplx db = -orientation(p.sector) * I * std::sin(2.0 * phi) / std::conj(w);
    const double x = z0_ + p.u;
    return (h(p.sector, x) - f(p.sector, cplx(x, p.v))) * db + 0.5 * b * h_prime(p.sector, x);
  }
  if (!(step > 0.0)) throw DomainError("dbar: step must be positive");
  auto at = [&](double du, double dv) {
    return extension(SectorPoint{p.u + du, p.v + dv, p.sector});
  };
  const cplx du = (at(step, 0) - at(-step, 0)) / (2.0 * step);
  const cplx dv = (at(0, step) - at(0, -step)) / (2.0 * step);
  return 0.5 * (du + I * dv);
}

cplx f1(cplx z, double z0, const ReflectionCoefficient& r) {
  return ExtensionModel(z0, r).f(Sector::omega1, z);
}

cplx extension_R1(const SectorPoint& p, double z0, const ReflectionCoefficient& r) {
  if (p.sector != Sector::omega1) throw DomainError("extension_R1: point must be in omega1");
  return ExtensionModel(z0, r).extension(p);
}

cplx dbar_R1(const SectorPoint& p, double z0, const ReflectionCoefficient& r, DbarMethod method,
             double step) {
  if (p.sector != Sector::omega1) throw DomainError("dbar_R1: point must be in omega1");
  return ExtensionModel(z0, r).dbar(p, method, step);
}

BoundConstants fit_dbar_bound(const ExtensionModel& model, double radius_min, double radius_max,
                              std::size_t n_radius, std::size_t n_angle, Sector sector) {
  if (!(radius_min > 0.0 && radius_max > radius_min) || n_radius < 2 || n_angle < 1)
    throw DomainError("fit_dbar_bound: bad sample grid");
  const std::size_t n = n_radius * n_angle;
  std::vector<double> term1(n), b_half(n), dbar_abs(n), rp_abs(n), rad(n);
  const double ratio = std::log(radius_max / radius_min) / static_cast<double>(n_radius - 1);
  parallel_for(n, [&](std::size_t k) {
    const double rho = radius_min * std::exp(ratio * static_cast<double>(k / n_angle));
    const double phi = kQuarter * (static_cast<double>(k % n_angle) + 0.5) / static_cast<double>(n_angle);
    const SectorPoint p = SectorPoint::from_polar(sector, rho, phi);
    const double x = model.z0() + p.u;
    const cplx diff = model.h(sector, x) - model.f(sector, cplx(x, p.v));
    term1[k] = std::abs(diff) * std::abs(std::sin(2.0 * phi)) / std::sqrt(rho);
    b_half[k] = 0.5 * std::abs(std::cos(2.0 * phi));
    dbar_abs[k] = std::abs(model.dbar(p, DbarMethod::analytic));
    rp_abs[k] = std::abs(model.h_prime(sector, x));
    rad[k] = rho;
  });
  BoundConstants c;
  c.points = n;
  c.c1 = *std::max_element(term1.begin(), term1.end());
  c.c2 = *std::max_element(b_half.begin(), b_half.end());
  for (std::size_t k = 0; k < n; ++k) {
    const double bound = c.c1 / std::sqrt(rad[k]) + c.c2 * rp_abs[k];
    if (bound > 0.0) c.max_ratio = std::max(c.max_ratio, dbar_abs[k] / bound);
  }
  return c;
}

namespace {

// int_0^{vmax} dv int_{max(v, ·)}^{u_end(v)} g(u, v) e^{-tuv} du in log variables.
// u_cap bounds u; probe_u/probe_v (if positive) become panel breaks.
template <class G>
double sector_integral(double t, double u_cap, const G& g, double probe_u, double probe_v) {
  if (!(t > 0.0)) throw DomainError("decay integral: t must be positive");
  if (!(u_cap > 0.0)) return 0.0;
  const double vmax = std::min(u_cap, std::sqrt(kCutoff / t));
  const double v_lo = vmax * 1e-12;
  bool ok = true;
  double worst = 0.0;

  auto inner = [&](double v) {
    const double u_end = std::min(u_cap, kCutoff / (t * v));
    if (!(u_end > v)) return 0.0;
    auto fu = [&](double mu) {
      const double u = std::exp(mu);
      return g(u, v) * std::exp(-t * u * v) * u;
    };
    std::vector<double> br{std::log(v), std::log(u_end)};
    if (probe_u > v && probe_u < u_end) br.insert(br.begin() + 1, std::log(probe_u));
    const auto res = quad::integrate_panels(fu, br, 0.0, kInnerTol);
    if (!res.converged) ok = false;
    return res.value;
  };
  auto fv = [&](double eta) {
    const double v = std::exp(eta);
    return inner(v) * v;
  };
  std::vector<double> br{std::log(v_lo), std::log(vmax)};
  if (probe_v > v_lo && probe_v < vmax) br.insert(br.begin() + 1, std::log(probe_v));
  const auto res = quad::integrate_panels(fv, br, 0.0, kOuterTol);
  worst = res.value;
  if (!ok || !res.converged) throw NumericalFailure("decay integral did not converge", worst);
  return res.value;
}

}  // namespace

double decay_integral_I1(double t, cplx z_probe, double z0, const ReflectionCoefficient& r) {
  if (!(z_probe.imag() > 0.0)) throw DomainError("decay_integral_I1: probe needs Im > 0");
  if (r.is_zero()) return 0.0;
  const cplx zp = z_probe - z0;
  if (zp.real() >= zp.imag()) throw DomainError("decay integral: probe inside the sector");
  auto g = [&](double u, double v) {
    return std::abs(r.derivative(z0 + u)) / std::abs(cplx(u, v) - zp);
  };
  return sector_integral(t, r.z_max() - z0, g, zp.real(), zp.imag());
}

double decay_integral_I2(double t, cplx z_probe, double z0) {
  if (!(z_probe.imag() > 0.0)) throw DomainError("decay_integral_I2: probe needs Im > 0");
  const cplx zp = z_probe - z0;
  if (zp.real() >= zp.imag()) throw DomainError("decay integral: probe inside the sector");
  auto g = [&](double u, double v) {
    return std::pow(u * u + v * v, -0.25) / std::abs(cplx(u, v) - zp);
  };
  return sector_integral(t, kFarCap, g, zp.real(), zp.imag());
}

double decay_integral_I3(double t, double z0, const ReflectionCoefficient& r) {
  if (r.is_zero()) return 0.0;
  auto g = [&](double u, double) { return std::abs(r.derivative(z0 + u)); };
  return sector_integral(t, r.z_max() - z0, g, -1.0, -1.0);
}

double decay_integral_I4(double t, double z0) {
  (void)z0;  // translation invariant
  auto g = [](double u, double v) { return std::pow(u * u + v * v, -0.25); };
  // u > cap: int u^{-1/2} (1 - e^{-t u^2}) / (t u) du ~ 2 cap^{-1/2} / t
  return sector_integral(t, kFarCap, g, -1.0, -1.0) + 2.0 / (std::sqrt(kFarCap) * t);
}

std::vector<cplx> default_probes(double z0) {
  return {cplx(z0, 1e-2), cplx(z0, 1e-3), cplx(z0, 1e-4), cplx(z0, 1e-5), cplx(z0 - 1e-3, 5e-4)};
}

DecaySweep decay_sweep(const std::vector<double>& ts, double z0, const ReflectionCoefficient& r,
                       const std::vector<cplx>& probes) {
  if (probes.empty()) throw DomainError("decay_sweep: empty probe set");
  const std::size_t nt = ts.size(), np = probes.size();
  const std::size_t per_t = 2 * np + 2;
  std::vector<double> vals(nt * per_t);
  parallel_for(vals.size(), [&](std::size_t k) {
    const double t = ts[k / per_t];
    const std::size_t j = k % per_t;
    if (j < np) vals[k] = decay_integral_I1(t, probes[j], z0, r);
    else if (j < 2 * np) vals[k] = decay_integral_I2(t, probes[j - np], z0);
    else if (j == 2 * np) vals[k] = decay_integral_I3(t, z0, r);
    else vals[k] = decay_integral_I4(t, z0);
  });
  DecaySweep s;
  s.ts = ts;
  for (std::size_t i = 0; i < nt; ++i) {
    const double* row = &vals[i * per_t];
    s.I1.push_back(*std::max_element(row, row + np));
    s.I2.push_back(*std::max_element(row + np, row + 2 * np));
    s.I3.push_back(row[2 * np]);
    s.I4.push_back(row[2 * np + 1]);
  }
  auto positive = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x > 0.0; });
  };
  if (nt >= 2) {
    if (positive(s.I1)) s.fit1 = fit_decay(ts, s.I1, 2);
    s.fit2 = fit_decay(ts, s.I2, 2);
    if (positive(s.I3)) s.fit3 = fit_decay(ts, s.I3, 2);
    s.fit4 = fit_decay(ts, s.I4, 2);
  }
  return s;
}

ReflectionCoefficient rough_reflection(double z0, double amplitude, double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("rough_reflection: need 0 < p < 1");
  std::vector<double> offsets;
  for (double d = 1e-6; d < 0.05; d *= 1.08) offsets.push_back(d);
  for (double d = 0.05; d < 8.0 - 1e-9; d += 0.01) offsets.push_back(d);
  offsets.push_back(8.0);
  std::vector<double> z;
  for (auto it = offsets.rbegin(); it != offsets.rend(); ++it) z.push_back(z0 - *it);
  for (double d : offsets) z.push_back(z0 + d);
  std::vector<cplx> r(z.size()), rp(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    const double u = z[k] - z0, a = std::abs(u);
    const double g = amplitude * std::exp(-u * u);
    const double sgn = u > 0 ? 1.0 : -1.0;
    r[k] = g * (1.0 + std::pow(a, p));
    rp[k] = g * (p * std::pow(a, p - 1.0) * sgn - 2.0 * u * (1.0 + std::pow(a, p)));
  }
  return ReflectionCoefficient::with_derivative(std::move(z), std::move(r), std::move(rp));
}

}  // namespace nlsdbar
