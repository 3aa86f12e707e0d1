#pragma once

// Minimal complex arithmetic over __float128 for the parabolic-cylinder
// Maclaurin series, whose terms cancel by up to e^{|z|^2/2} inside |z| <= 8.

#include <quadmath.h>

#include "nlsdbar/types.hpp"

namespace nlsdbar::detail {

using f128 = __float128;

struct qcplx {
  f128 re = 0;
  f128 im = 0;

  qcplx() = default;
  qcplx(f128 r, f128 i = 0) : re(r), im(i) {}
  explicit qcplx(cplx z) : re(z.real()), im(z.imag()) {}

  cplx to_double() const { return {static_cast<double>(re), static_cast<double>(im)}; }
};

inline qcplx operator+(qcplx a, qcplx b) { return {a.re + b.re, a.im + b.im}; }
inline qcplx operator-(qcplx a, qcplx b) { return {a.re - b.re, a.im - b.im}; }
inline qcplx operator-(qcplx a) { return {-a.re, -a.im}; }
inline qcplx operator*(qcplx a, qcplx b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline qcplx operator*(qcplx a, f128 s) { return {a.re * s, a.im * s}; }
inline qcplx operator/(qcplx a, f128 s) { return {a.re / s, a.im / s}; }
inline qcplx operator/(qcplx a, qcplx b) {
  const f128 d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline f128 abs2(qcplx a) { return a.re * a.re + a.im * a.im; }

qcplx exp(qcplx z);
qcplx log(qcplx z);

/// 1/Gamma(z), entire; exactly zero at the poles of Gamma.
qcplx rgamma(qcplx z);

}  // namespace nlsdbar::detail
