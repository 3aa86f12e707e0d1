#pragma once

#include <cmath>

#include "nlsdbar/types.hpp"

namespace nlsdbar {

/// 2x2 complex matrix, row-major entries.
struct Matrix2C {
  cplx m11{1.0}, m12{0.0}, m21{0.0}, m22{1.0};

  static constexpr Matrix2C identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Matrix2C zero() { return {0.0, 0.0, 0.0, 0.0}; }
  static constexpr Matrix2C sigma3() { return {1.0, 0.0, 0.0, -1.0}; }
  static constexpr Matrix2C diag(cplx a, cplx d) { return {a, 0.0, 0.0, d}; }
  static constexpr Matrix2C lower(cplx c) { return {1.0, 0.0, c, 1.0}; }
  static constexpr Matrix2C upper(cplx c) { return {1.0, c, 0.0, 1.0}; }

  cplx det() const { return m11 * m22 - m12 * m21; }
  cplx trace() const { return m11 + m22; }

  Matrix2C inverse() const {
    const cplx d = det();
    return {m22 / d, -m12 / d, -m21 / d, m11 / d};
  }

  /// Frobenius norm.
  double norm() const {
    return std::sqrt(std::norm(m11) + std::norm(m12) + std::norm(m21) + std::norm(m22));
  }

  Matrix2C& operator+=(const Matrix2C& o) {
    m11 += o.m11; m12 += o.m12; m21 += o.m21; m22 += o.m22;
    return *this;
  }
  Matrix2C& operator-=(const Matrix2C& o) {
    m11 -= o.m11; m12 -= o.m12; m21 -= o.m21; m22 -= o.m22;
    return *this;
  }
  Matrix2C& operator*=(cplx s) {
    m11 *= s; m12 *= s; m21 *= s; m22 *= s;
    return *this;
  }
};

inline Matrix2C operator*(const Matrix2C& a, const Matrix2C& b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}
inline Matrix2C operator+(Matrix2C a, const Matrix2C& b) { return a += b; }
inline Matrix2C operator-(Matrix2C a, const Matrix2C& b) { return a -= b; }
inline Matrix2C operator*(Matrix2C a, cplx s) { return a *= s; }
inline Matrix2C operator*(cplx s, Matrix2C a) { return a *= s; }

}  // namespace nlsdbar
