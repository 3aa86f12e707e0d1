#include <doctest.h>

#include <cmath>

#include "nlsdbar/error.hpp"
#include "nlsdbar/fit.hpp"
#include "nlsdbar/model_rhp.hpp"
#include "nlsdbar/special.hpp"

using namespace nlsdbar;

namespace {

const cplx kR0s[] = {cplx(0.25), std::polar(0.5, pi / 3), cplx(0.9), cplx(-0.3, -0.2)};

std::vector<double> radii() {
  std::vector<double> out;
  for (int k = 0; k < 40; ++k) out.push_back(0.25 * std::pow(32.0, k / 39.0));
  return out;
}

// Sample points off the rays and off the real axis.
std::vector<cplx> off_contour_points() {
  std::vector<cplx> out;
  for (double rad : {0.3, 1.0, 2.5, 6.0})
    for (double a : {0.3, 1.2, 2.0, 2.8, -0.4, -1.4, -2.1, -2.9}) out.push_back(std::polar(rad, a));
  return out;
}

Matrix2C coeff(cplx xi, const ModelParams& p) {
  return Matrix2C{-0.5 * I * xi, p.beta12, p.beta21, 0.5 * I * xi};
}

}  // namespace

TEST_CASE("model parameters") {
  const ModelParams p = ModelParams::make(0.5);
  CHECK(std::abs(p.nu - 0.0457860238696217044) < 1e-16);
  CHECK(std::abs(p.beta12 * p.beta21 - p.nu) < 1e-14);
  const cplx b12 = std::sqrt(2 * pi) * std::exp(I * pi / 4.0) * std::exp(-pi * p.nu / 2) /
                   (p.r0 * gamma_fn(cplx(0.0, -p.nu)));
  CHECK(std::abs(p.beta12 - b12) < 1e-14);
  const ModelParams q = ModelParams::make(0.5, Transcription::as_printed);
  CHECK(std::abs(q.beta21 - q.beta12 / q.nu) < 1e-12);
  CHECK_THROWS_AS(ModelParams::make(1.0), DomainError);
  CHECK(ModelParams::make(0.0).degenerate());
}

TEST_CASE("jump matrices") {
  for (cplx r0 : kR0s) {
    const ModelParams p = ModelParams::make(r0);
    for (int ray = 1; ray <= 4; ++ray)
      for (double rad : {0.3, 1.0, 5.0}) CHECK(std::abs(jump_VP(ray, rad, p).det() - 1.0) < 1e-14);
  }
  const ModelParams p = ModelParams::make(std::polar(0.5, pi / 3));
  const cplx xi = std::polar(1.0, pi / 4);
  const Matrix2C v = jump_VP(xi, p);
  const cplx expect = p.r0 * std::exp(-2.0 * I * p.nu * (I * pi / 4.0)) * std::exp(0.5 * I * std::exp(I * pi / 2.0));
  CHECK(std::abs(v.m21 - expect) < 1e-14);
  CHECK(v.m12 == cplx(0.0));

  const ModelParams z = ModelParams::make(0.0);
  for (int ray = 1; ray <= 4; ++ray) CHECK((jump_VP(ray, 2.0, z) - Matrix2C::identity()).norm() == 0.0);
  CHECK_THROWS_AS(jump_VP(cplx(1.0, 0.3), p), DomainError);
}

TEST_CASE("regions and rays") {
  CHECK(region_of(std::polar(1.0, 0.1)) == 1);
  CHECK(region_of(std::polar(1.0, 1.0)) == 2);
  CHECK(region_of(std::polar(1.0, 3.0)) == 3);
  CHECK(region_of(std::polar(1.0, -3.0)) == 4);
  CHECK(region_of(std::polar(1.0, -1.0)) == 5);
  CHECK(region_of(std::polar(1.0, -0.1)) == 6);
  CHECK_THROWS_AS(region_of(std::polar(2.0, pi / 4)), DomainError);
  CHECK_THROWS_AS(region_of(0.0), DomainError);
  CHECK_THROWS_AS(model_P(std::polar(2.0, 3 * pi / 4), ModelParams::make(0.5)), DomainError);
}

TEST_CASE("jump conditions hold on all four rays") {
  for (cplx r0 : kR0s) {
    const ModelParams p = ModelParams::make(r0);
    double worst = 0.0;
    for (int ray = 1; ray <= 4; ++ray)
      for (double rad : radii()) worst = std::max(worst, jump_residual(ray, rad, p));
    CAPTURE(r0);
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("P is continuous across the real axis") {
  for (cplx r0 : kR0s) {
    const ModelParams p = ModelParams::make(r0);
    double worst = 0.0;
    for (double rad : radii()) {
      worst = std::max(worst, real_axis_residual(rad, p));
      worst = std::max(worst, real_axis_residual(-rad, p));
    }
    CAPTURE(r0);
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("det P = 1") {
  for (cplx r0 : kR0s) {
    const ModelParams p = ModelParams::make(r0);
    for (cplx xi : off_contour_points()) {
      CAPTURE(xi);
      CHECK(std::abs(model_P(xi, p).det() - 1.0) <= 1e-6);
    }
  }
}

TEST_CASE("Psi columns solve the first-order system") {
  const ModelParams p = ModelParams::make(std::polar(0.5, pi / 3));
  const double h = 1e-4;
  for (cplx xi : off_contour_points()) {
    auto psi = [&](cplx z) { return xi.imag() > 0 ? psi_plus(z, p) : psi_minus(z, p); };
    const Matrix2C d = (psi(xi + h) - psi(xi - h)) * cplx(1.0 / (2.0 * h));
    const Matrix2C res = d - coeff(xi, p) * psi(xi);
    CAPTURE(xi);
    CHECK(res.norm() <= 1e-6 * psi(xi).norm());
  }
}

TEST_CASE("det Psi is constant") {
  const ModelParams p = ModelParams::make(0.9);
  const cplx d0 = psi_plus(std::polar(0.5, 1.0), p).det();
  for (double rad : {0.25, 1.0, 2.0, 4.0, 7.0}) {
    CHECK(std::abs(psi_plus(std::polar(rad, 1.0), p).det() - d0) <= 1e-8 * std::abs(d0));
    CHECK(std::abs(psi_minus(std::polar(rad, -2.0), p).det() - d0) <= 1e-8 * std::abs(d0));
  }
  CHECK_THROWS_AS(psi_plus(cplx(1.0, -1.0), p), DomainError);
  CHECK_THROWS_AS(psi_minus(cplx(1.0, 1.0), p), DomainError);
}

TEST_CASE("small r0 limit") {
  const ModelParams p = ModelParams::make(1e-8);
  const cplx xi(0.7, 1.1);
  const Matrix2C m = psi_plus(xi, p);
  const cplx zeta = std::exp(-0.75 * I * pi) * xi;
  CHECK(std::abs(m.m11 - std::exp(-zeta * zeta / 4.0)) < 1e-6);
  CHECK(std::isfinite(std::abs(m.m12)));
  CHECK(std::isfinite(std::abs(m.m21)));
  CHECK((model_P(xi, p) - Matrix2C::identity()).norm() < 1e-6);
  CHECK((model_P(xi, ModelParams::make(0.0)) - Matrix2C::identity()).norm() == 0.0);
}

TEST_CASE("P1 at infinity") {
  for (cplx r0 : kR0s) {
    const ModelParams p = ModelParams::make(r0);
    const Matrix2C p1 = p1_infinity(p);
    CHECK(p1.m11 == cplx(0.0));
    CHECK(p1.m22 == cplx(0.0));
    CHECK(std::abs(p1.m12 * p1.m21 - p.nu) <= 1e-10);
    CHECK(std::abs(std::norm(p1.m12) - p.nu) <= 1e-10);
    const cplx c = std::sqrt(2 * pi) * std::exp(I * pi / 4.0) * std::exp(-pi * p.nu / 2);
    const cplx g = gamma_fn(cplx(0.0, -p.nu));
    CHECK(std::abs(p1.m12 - (-I * c / (r0 * g))) <= 1e-12);
    CHECK(std::abs(p1.m21 - (I * p.nu * r0 * g / c)) <= 1e-12);
  }
  CHECK(p1_infinity(ModelParams::make(0.0)).norm() == 0.0);
}

TEST_CASE("P approaches I + P1/xi") {
  const ModelParams p = ModelParams::make(std::polar(0.5, pi / 3));
  std::vector<double> rs, es;
  for (double rad : {10.0, 14.0, 20.0, 28.0, 40.0}) {
    rs.push_back(rad);
    es.push_back(large_xi_residual(cplx(0.0, rad), p));
  }
  const DecayFit f = fit_decay(rs, es);
  CHECK(f.exponent <= -0.9);
}

TEST_CASE("the printed transcription fails the jump conditions") {
  const ModelParams p = ModelParams::make(0.5, Transcription::as_printed);
  double worst_jump = 0.0, worst_det = 0.0;
  for (int ray = 1; ray <= 4; ++ray)
    for (double rad : {0.5, 1.0, 3.0}) worst_jump = std::max(worst_jump, jump_residual(ray, rad, p));
  for (cplx xi : off_contour_points()) worst_det = std::max(worst_det, std::abs(model_P(xi, p).det() - 1.0));
  CHECK(worst_jump > 1e-2);
  CHECK(worst_det > 1e-2);
}
