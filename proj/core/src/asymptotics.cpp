#include "nlsdbar/asymptotics.hpp"

#include <cmath>

#include "nlsdbar/error.hpp"
#include "nlsdbar/model_rhp.hpp"
#include "nlsdbar/parallel.hpp"

namespace nlsdbar {

AsymptoticFrame AsymptoticFrame::make(double x, double t) {
  if (!(t > 0.0) || !std::isfinite(t) || !std::isfinite(x))
    throw DomainError("AsymptoticFrame: need finite x and t > 0");
  return {x, t, -x / (4.0 * t)};
}

cplx rhat0(double z0, const ReflectionCoefficient& r) {
  const cplx rz = r(z0);
  if (rz == cplx(0.0)) return 0.0;
  return rz * std::exp(-2.0 * I * nu(rz) - 2.0 * beta(cplx(z0), z0, r));
}

LeadingTerm leading_q(const AsymptoticFrame& frame, const ReflectionCoefficient& r,
                      double t_min) {
  LeadingTerm out;
  out.untrusted = frame.t < t_min;
  const cplx rz = r(frame.z0);
  if (rz == cplx(0.0)) {
    out.degenerate = true;
    return out;
  }
  const AsymptoticCoefficient c = asymptotic_coefficient(frame.z0, r);
  out.nu = c.nu;
  const double phase = frame.x * frame.x / (4.0 * frame.t) - c.nu * std::log(8.0 * frame.t);
  out.q = c.alpha * std::polar(1.0 / std::sqrt(frame.t), phase);
  return out;
}

LeadingTerm leading_q_via_model(const AsymptoticFrame& frame, const ReflectionCoefficient& r,
                                double t_min) {
  LeadingTerm out;
  out.untrusted = frame.t < t_min;
  const cplx rh = rhat0(frame.z0, r);
  if (rh == cplx(0.0)) {
    out.degenerate = true;
    return out;
  }
  out.nu = nu(rh);
  const double t = frame.t;
  const cplx r0 =
      rh * std::polar(1.0, out.nu * std::log(8.0 * t) - 4.0 * t * frame.z0 * frame.z0);
  const Matrix2C p1 = p1_infinity(ModelParams::make(r0));
  out.q = 2.0 * I * p1.m12 / std::sqrt(8.0 * t);
  return out;
}

LeadingTerm leading_q(const AsymptoticFrame& frame, const ReflectionCoefficient& r, Route route,
                      double t_min) {
  return route == Route::closed_form ? leading_q(frame, r, t_min)
                                 : leading_q_via_model(frame, r, t_min);
}

std::vector<AsymptoticSample> asymptotic_table(const std::vector<double>& xs,
                                               const std::vector<double>& ts,
                                               const ReflectionCoefficient& r, Route route,
                                               double t_min) {
  std::vector<AsymptoticSample> out(xs.size() * ts.size());
  parallel_for(out.size(), [&](std::size_t k) {
    const double x = xs[k / ts.size()], t = ts[k % ts.size()];
    const AsymptoticFrame f = AsymptoticFrame::make(x, t);
    const LeadingTerm lt = leading_q(f, r, route, t_min);
    out[k] = {x, t, f.z0, lt.nu, lt.q, route, lt.degenerate, lt.untrusted};
  });
  return out;
}

}  // namespace nlsdbar
