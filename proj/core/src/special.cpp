#include "nlsdbar/special.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "nlsdbar/error.hpp"
#include "quad_precision.hpp"

namespace nlsdbar {

namespace {

constexpr std::array<double, 10> kBernoulli = {
    1.0 / 6.0,       -1.0 / 30.0,       1.0 / 42.0,    -1.0 / 30.0,
    5.0 / 66.0,      -691.0 / 2730.0,   7.0 / 6.0,     -3617.0 / 510.0,
    43867.0 / 798.0, -174611.0 / 330.0};

cplx stirling(cplx w) {
  cplx s = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * pi);
  const cplx w2 = w * w;
  cplx wpow = w;
  for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
    s += kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0) * wpow);
    wpow *= w2;
  }
  return s;
}

bool is_pole(cplx w) {
  return w.imag() == 0.0 && w.real() <= 0.0 && w.real() == std::floor(w.real());
}

// Largest exponent we allow before exp() would overflow.
constexpr double kMaxExponent = 700.0;

}  // namespace

cplx log_gamma(cplx w) {
  if (is_pole(w)) throw DomainError("log_gamma: pole at non-positive integer");
  cplx shift = 0.0;
  while (w.real() < 12.0) {
    shift += std::log(w);
    w += 1.0;
  }
  return stirling(w) - shift;
}

cplx gamma_fn(cplx w) { return std::exp(log_gamma(w)); }

cplx rgamma(cplx w) {
  if (is_pole(w)) return 0.0;
  return std::exp(-log_gamma(w));
}

namespace pcf_detail {

std::pair<cplx, cplx> series(cplx a_in, cplx zeta_in) {
  using detail::f128;
  using detail::qcplx;
  const qcplx a(a_in), z(zeta_in);
  const qcplx sqrt_pi(sqrtq(M_PIq));
  const f128 ln2 = M_LN2q;
  const qcplx c0 = detail::exp(a * (ln2 / 2)) * sqrt_pi * detail::rgamma((qcplx(1) - a) / 2);
  const qcplx c1 = -(detail::exp((a + qcplx(1)) * (ln2 / 2)) * sqrt_pi * detail::rgamma(-a / 2));

  // c_{k+2} = ((-a - 1/2) c_k + c_{k-2}/4) / ((k+1)(k+2))
  const qcplx shift = -a - qcplx(0.5Q);
  qcplx cm2(0), cm1(0), ck = c0, ck1 = c1;  // c_{k-2}, c_{k-1}, c_k, c_{k+1}
  qcplx zk(1), zkm1(0);                     // z^k, z^{k-1}
  qcplx sum(0), dsum(0);
  double max_term = 0.0;
  int quiet = 0;
  for (int k = 0; k < 4000; ++k) {
    const qcplx term = ck * zk;
    sum = sum + term;
    if (k > 0) dsum = dsum + ck * zkm1 * static_cast<f128>(k);
    const double mag = std::sqrt(static_cast<double>(detail::abs2(term)));
    max_term = std::max(max_term, mag);
    quiet = (mag <= 1e-36 * max_term) ? quiet + 1 : 0;
    if (k > 8 && quiet >= 4) break;
    const qcplx next = (shift * ck + cm2 / 4) / static_cast<f128>((k + 1) * (k + 2));
    // advance: c_{k+2} computed from c_k and c_{k-2}
    cm2 = cm1;
    cm1 = ck;
    ck = ck1;
    ck1 = next;
    zkm1 = zk;
    zk = zk * z;
  }
  return {sum.to_double(), dsum.to_double()};
}

std::pair<cplx, cplx> asymptotic(cplx a, cplx zeta) {
  const cplx lz = std::log(zeta);
  const cplx z2 = zeta * zeta;

  // Recessive/oscillatory part zeta^a e^{-zeta^2/4} S1.
  const cplx e1_exponent = a * lz - 0.25 * z2;
  if (e1_exponent.real() > kMaxExponent)
    throw RangeError("pcf_D: zeta^a exp(-zeta^2/4) overflows", kMaxExponent);
  cplx s1 = 1.0, ds1 = 0.0, t = 1.0;
  double prev = 1.0;
  for (int k = 0; k < 400; ++k) {
    const cplx next = t * (-(2.0 * k - a) * (2.0 * k + 1.0 - a)) / ((k + 1.0) * 2.0 * z2);
    const double mag = std::abs(next);
    if (mag > prev) break;  // optimal truncation
    s1 += next;
    ds1 += next * (-2.0 * (k + 1.0)) / zeta;
    t = next;
    prev = mag;
    if (mag < 1e-18 * std::abs(s1)) break;
  }
  const cplx f1 = std::exp(e1_exponent);
  cplx value = f1 * s1;
  cplx deriv = f1 * ((a / zeta - 0.5 * zeta) * s1 + ds1);

  const double arg = std::arg(zeta);
  if (std::abs(arg) > 0.5 * pi) {
    const cplx e2_exponent = (-a - 1.0) * lz + 0.25 * z2;
    if (e2_exponent.real() > kMaxExponent)
      throw RangeError("pcf_D: zeta^{-a-1} exp(zeta^2/4) overflows", kMaxExponent);
    cplx s2 = 1.0, ds2 = 0.0, u = 1.0;
    prev = 1.0;
    for (int k = 0; k < 400; ++k) {
      const cplx next = u * ((a + 1.0 + 2.0 * k) * (a + 2.0 + 2.0 * k)) / ((k + 1.0) * 2.0 * z2);
      const double mag = std::abs(next);
      if (mag > prev) break;
      s2 += next;
      ds2 += next * (-2.0 * (k + 1.0)) / zeta;
      u = next;
      prev = mag;
      if (mag < 1e-18 * std::abs(s2)) break;
    }
    const double side = arg > 0.0 ? 1.0 : -1.0;
    const cplx stokes = -std::sqrt(2.0 * pi) * rgamma(-a) * std::exp(side * I * pi * a);
    const cplx f2 = stokes * std::exp(e2_exponent);
    value += f2 * s2;
    deriv += f2 * (((-a - 1.0) / zeta + 0.5 * zeta) * s2 + ds2);
  }
  return {value, deriv};
}

}  // namespace pcf_detail

std::pair<cplx, cplx> pcf_D_with_derivative(cplx a, cplx zeta) {
  if (!std::isfinite(zeta.real()) || !std::isfinite(zeta.imag()))
    throw DomainError("pcf_D: non-finite argument");
  if (std::abs(zeta) <= pcf_detail::kSeriesRadius) return pcf_detail::series(a, zeta);
  return pcf_detail::asymptotic(a, zeta);
}

cplx pcf_D(cplx a, cplx zeta) { return pcf_D_with_derivative(a, zeta).first; }

}  // namespace nlsdbar
