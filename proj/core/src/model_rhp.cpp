#include "nlsdbar/model_rhp.hpp"

#include <cmath>

#include "nlsdbar/error.hpp"
#include "nlsdbar/special.hpp"

namespace nlsdbar {

namespace {

const cplx kRot1 = std::polar(1.0, pi / 4);       // e^{i pi/4}
const cplx kRot3 = std::polar(1.0, 3 * pi / 4);   // e^{3i pi/4}

// xi^{c} with arg xi in [0, pi] (upper) or [-pi, 0] (lower).
cplx power_on_branch(cplx xi, cplx c, bool upper) {
  double arg = std::arg(xi);
  if (upper && arg < 0) arg += 2 * pi;
  if (!upper && arg > 0) arg -= 2 * pi;
  if (upper && xi.imag() == 0.0 && xi.real() < 0) arg = pi;
  if (!upper && xi.imag() == 0.0 && xi.real() < 0) arg = -pi;
  const cplx lg(std::log(std::abs(xi)), arg);
  return std::exp(c * lg);
}

// Psi built from two PCF evaluations: zeta1 = c1 xi with order i nu (column 1),
// zeta2 = c2 xi with order -i nu (column 2).
Matrix2C psi_from(cplx xi, const ModelParams& p, cplx c1, cplx c2, double k1, double k2) {
  const cplx a(0.0, p.nu);
  const auto [d1, d1p] = pcf_D_with_derivative(a, c1 * xi);
  const auto [d2, d2p] = pcf_D_with_derivative(-a, c2 * xi);
  const double e1 = std::exp(k1 * pi * p.nu), e2 = std::exp(k2 * pi * p.nu);
  Matrix2C m;
  m.m11 = e1 * d1;
  m.m21 = e1 / p.beta12 * (c1 * d1p + 0.5 * I * xi * d1);
  m.m12 = e2 / p.beta21 * (c2 * d2p - 0.5 * I * xi * d2);
  m.m22 = e2 * d2;
  return m;
}

Matrix2C free_psi(cplx xi) {
  const cplx e = std::exp(0.25 * I * xi * xi);
  return Matrix2C::diag(1.0 / e, e);
}

Matrix2C region_factor(int region, const ModelParams& p) {
  const double m = 1.0 - std::norm(p.r0);
  switch (region) {
    case 1: return Matrix2C::lower(-p.r0);
    case 3: return Matrix2C::upper(std::conj(p.r0) / m);
    case 4:
      return p.transcription == Transcription::corrected ? Matrix2C::lower(p.r0 / m)
                                                         : Matrix2C::upper(p.r0 / m);
    case 6: return Matrix2C::upper(-std::conj(p.r0));
    default: return Matrix2C::identity();
  }
}

bool near_odd_quarter(double angle) {
  const double q = angle / (pi / 4);
  const double k = std::round(q);
  return static_cast<long>(k) % 2 != 0 && std::abs(q - k) < 1e-13;
}

}  // namespace

ModelParams ModelParams::make(cplx r0, Transcription t) {
  if (!(std::abs(r0) < 1.0)) throw DomainError("ModelParams: |r0| must be below 1");
  ModelParams p;
  p.r0 = r0;
  p.transcription = t;
  p.nu = -std::log1p(-std::norm(r0)) / (2 * pi);
  if (p.degenerate()) return p;
  const cplx x = std::sqrt(2 * pi) * kRot1 * std::exp(-pi * p.nu / 2);
  p.beta12 = x / (r0 * gamma_fn(cplx(0.0, -p.nu)));
  p.beta21 = t == Transcription::corrected ? p.nu / p.beta12 : p.beta12 / p.nu;
  return p;
}

Matrix2C psi_plus(cplx xi, const ModelParams& p) {
  if (xi.imag() < 0.0) throw DomainError("psi_plus: needs Im xi >= 0");
  if (p.degenerate()) return free_psi(xi);
  return psi_from(xi, p, std::conj(kRot3), std::conj(kRot1), -0.75, 0.25);
}

Matrix2C psi_minus(cplx xi, const ModelParams& p) {
  if (xi.imag() > 0.0) throw DomainError("psi_minus: needs Im xi <= 0");
  if (p.degenerate()) return free_psi(xi);
  return psi_from(xi, p, kRot1, kRot3, 0.25, -0.75);
}

int region_of(cplx xi) {
  if (xi == cplx(0.0)) throw DomainError("region_of: xi = 0");
  double a = std::arg(xi);
  if (a < 0) a += 2 * pi;
  if (near_odd_quarter(a)) throw DomainError("region_of: xi lies on Sigma_P; use one-sided limits");
  static constexpr int table[8] = {1, 2, 2, 3, 4, 5, 5, 6};
  const int octant = std::min(7, static_cast<int>(std::floor(a / (pi / 4))));
  return table[octant];
}

Matrix2C model_P_in_region(cplx xi, int region, const ModelParams& p) {
  if (region < 1 || region > 6) throw DomainError("model_P_in_region: region must be 1..6");
  if (xi == cplx(0.0)) throw DomainError("model_P_in_region: xi = 0");
  if (p.degenerate()) return Matrix2C::identity();
  const bool upper = region <= 3;
  const Matrix2C psi = upper ? psi_plus(xi, p) : psi_minus(xi, p);
  const cplx e = std::exp(0.25 * I * xi * xi) * power_on_branch(xi, cplx(0.0, -p.nu), upper);
  const Matrix2C E = Matrix2C::diag(e, 1.0 / e);
  const Matrix2C T = region_factor(region, p);
  return p.transcription == Transcription::corrected ? psi * T * E : psi * E * T;
}

Matrix2C model_P(cplx xi, const ModelParams& p) { return model_P_in_region(xi, region_of(xi), p); }

double ray_angle(int ray) {
  if (ray < 1 || ray > 4) throw DomainError("ray must be 1..4");
  return (2 * ray - 1) * pi / 4;
}

int ray_plus_region(int ray) {
  static constexpr int plus[4] = {2, 2, 4, 6};
  ray_angle(ray);
  return plus[ray - 1];
}

int ray_minus_region(int ray) {
  static constexpr int minus[4] = {1, 3, 5, 5};
  ray_angle(ray);
  return minus[ray - 1];
}

Matrix2C jump_VP(int ray, double radius, const ModelParams& p) {
  if (!(radius > 0.0)) throw DomainError("jump_VP: radius must be positive");
  ray_angle(ray);
  if (p.degenerate()) return Matrix2C::identity();
  // principal arg of the ray point
  const double arg = ray <= 2 ? ray_angle(ray) : ray_angle(ray) - 2 * pi;
  const cplx xi = std::polar(radius, arg);
  // phase = xi^{-2i nu} e^{i xi^2 / 2}
  const cplx phase = std::exp(-2.0 * I * p.nu * cplx(std::log(radius), arg) + 0.5 * I * xi * xi);
  const double m = 1.0 - std::norm(p.r0);
  switch (ray) {
    case 1: return Matrix2C::lower(p.r0 * phase);
    case 2: return Matrix2C::upper(-std::conj(p.r0) / m / phase);
    case 3: return Matrix2C::lower(p.r0 / m * phase);
    default: return Matrix2C::upper(-std::conj(p.r0) / phase);
  }
}

Matrix2C jump_VP(cplx xi, const ModelParams& p) {
  if (xi == cplx(0.0)) throw DomainError("jump_VP: xi = 0");
  double a = std::arg(xi);
  if (a < 0) a += 2 * pi;
  for (int ray = 1; ray <= 4; ++ray)
    if (std::abs(a - ray_angle(ray)) < 1e-12) return jump_VP(ray, std::abs(xi), p);
  throw DomainError("jump_VP: xi is not on Sigma_P");
}

Matrix2C p1_infinity(const ModelParams& p) {
  if (p.degenerate()) return Matrix2C::zero();
  return {0.0, -I * p.beta12, I * p.beta21, 0.0};
}

double jump_residual(int ray, double radius, const ModelParams& p) {
  const double arg = ray <= 2 ? ray_angle(ray) : ray_angle(ray) - 2 * pi;
  const cplx xi = std::polar(radius, arg);
  const Matrix2C plus = model_P_in_region(xi, ray_plus_region(ray), p);
  const Matrix2C minus = model_P_in_region(xi, ray_minus_region(ray), p);
  return (plus - minus * jump_VP(ray, radius, p)).norm();
}

double real_axis_residual(double x, const ModelParams& p) {
  if (x == 0.0) throw DomainError("real_axis_residual: x = 0");
  const cplx xi(x, 0.0);
  const int above = x > 0 ? 1 : 3;
  const int below = x > 0 ? 6 : 4;
  return (model_P_in_region(xi, above, p) - model_P_in_region(xi, below, p)).norm();
}

double large_xi_residual(cplx xi, const ModelParams& p) {
  return ((model_P(xi, p) - Matrix2C::identity()) * xi - p1_infinity(p)).norm();
}

}  // namespace nlsdbar
