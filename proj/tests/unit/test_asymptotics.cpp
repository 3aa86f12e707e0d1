#include <doctest.h>

#include <cmath>

#include "nlsdbar/asymptotics.hpp"
#include "nlsdbar/error.hpp"
#include "nlsdbar/scattering.hpp"

using namespace nlsdbar;

namespace {

const ReflectionCoefficient& sech_r() {
  static const ReflectionCoefficient r =
      reflection_grid(sample_potential(Potential::sech(0.5), 0.005), default_z_grid());
  return r;
}

// Complex, non-even data so that phases and conjugations are exercised.
const ReflectionCoefficient& skew_r() {
  static const ReflectionCoefficient r =
      reflection_grid(sample_potential(Potential::gaussian(cplx(0.4, 0.3), 1.5), 0.005),
                      default_z_grid());
  return r;
}

}  // namespace

TEST_CASE("frame") {
  const auto f = AsymptoticFrame::make(3.0, 2.0);
  CHECK(f.z0 == -3.0 / 8.0);
  CHECK_THROWS_AS(AsymptoticFrame::make(1.0, 0.0), DomainError);
}

TEST_CASE("zero data") {
  const auto r = ReflectionCoefficient::zero();
  const auto f = AsymptoticFrame::make(1.0, 10.0);
  for (Route route : {Route::closed_form, Route::model}) {
    const LeadingTerm lt = leading_q(f, r, route);
    CHECK(lt.q == cplx(0.0));
    CHECK(lt.degenerate);
  }
  CHECK(rhat0(0.0, r) == cplx(0.0));
}

TEST_CASE("rhat0") {
  for (const auto* r : {&sech_r(), &skew_r()})
    for (double z0 : {-0.7, 0.0, 0.45}) {
      const cplx rh = rhat0(z0, *r);
      const cplx r0 = (*r)(z0);
      CHECK(std::abs(std::abs(rh) - std::abs(r0)) <= 1e-8);
      const double v = nu(r0);
      CHECK(std::abs(rh * std::exp(2.0 * I * v + 2.0 * beta(z0, z0, *r)) - r0) <= 1e-12);
    }
}

TEST_CASE("modulus of the leading term") {
  for (const auto* r : {&sech_r(), &skew_r()})
    for (double x : {-20.0, 0.0, 13.0})
      for (double t : {5.0, 50.0, 400.0}) {
        const auto f = AsymptoticFrame::make(x, t);
        const double v = nu((*r)(f.z0));
        const LeadingTerm th = leading_q(f, *r);
        const LeadingTerm md = leading_q_via_model(f, *r);
        CHECK(std::abs(std::abs(th.q) * std::sqrt(t) - std::sqrt(v / 2)) <= 1e-12);
        CHECK(std::abs(std::abs(md.q) * std::sqrt(t) - std::sqrt(v / 2)) <= 1e-8);
        CHECK(th.nu == doctest::Approx(v));
      }
}

TEST_CASE("even |r| gives symmetric modulus") {
  for (double x : {3.0, 17.0}) {
    const double a = std::abs(leading_q(AsymptoticFrame::make(x, 20.0), sech_r()).q);
    const double b = std::abs(leading_q(AsymptoticFrame::make(-x, 20.0), sech_r()).q);
    CHECK(std::abs(a - b) <= 1e-12);
  }
}

TEST_CASE("closed-form and model routes agree") {
  const auto f = AsymptoticFrame::make(0.0, 50.0);
  const cplx a = leading_q(f, sech_r()).q;
  const cplx b = leading_q_via_model(f, sech_r()).q;
  CHECK(std::abs(a - b) <= 1e-8 * std::abs(a));

  double worst = 0.0;
  for (const auto* r : {&sech_r(), &skew_r()})
    for (double z0 : {-1.0, -0.4, 0.0, 0.3, 0.9})
      for (double t : {2.0, 10.0, 50.0, 250.0, 1000.0}) {
        const auto g = AsymptoticFrame::make(-4.0 * t * z0, t);
        const cplx p = leading_q(g, *r, Route::closed_form).q;
        const cplx q = leading_q(g, *r, Route::model).q;
        worst = std::max(worst, std::abs(p - q) / std::abs(p));
      }
  CHECK(worst <= 1e-8);
}

TEST_CASE("scaling in (x, t)") {
  const double x = 6.0, t = 12.0;
  const double m = std::abs(leading_q(AsymptoticFrame::make(x, t), skew_r()).q);
  for (double lam : {0.5, 3.0, 40.0}) {
    const auto f = AsymptoticFrame::make(x * lam, t * lam);
    CHECK(f.z0 == doctest::Approx(-x / (4 * t)));
    CHECK(std::abs(std::abs(leading_q(f, skew_r()).q) - m / std::sqrt(lam)) <= 1e-13);
  }
}

TEST_CASE("phase factor is independent of t") {
  const double z0 = 0.2;
  double first = 0.0;
  bool have = false;
  for (double t : {3.0, 30.0, 300.0, 3000.0}) {
    const double x = -4.0 * t * z0;
    const auto f = AsymptoticFrame::make(x, t);
    const LeadingTerm lt = leading_q(f, skew_r());
    const cplx stripped = lt.q * std::exp(-I * x * x / (4.0 * t) + I * lt.nu * std::log(8.0 * t));
    const double ph = std::arg(stripped);
    if (have) CHECK(std::abs(std::remainder(ph - first, 2 * pi)) <= 1e-9);
    first = ph;
    have = true;
  }
}

TEST_CASE("untrusted below t_min") {
  CHECK(leading_q(AsymptoticFrame::make(0.0, 0.5), sech_r()).untrusted);
  CHECK_FALSE(leading_q(AsymptoticFrame::make(0.0, 2.0), sech_r()).untrusted);
  CHECK(leading_q(AsymptoticFrame::make(0.0, 2.0), sech_r(), 5.0).untrusted);
}

TEST_CASE("asymptotic table") {
  const std::vector<double> xs{-10.0, 0.0, 10.0}, ts{10.0, 40.0};
  const auto tab = asymptotic_table(xs, ts, sech_r(), Route::model);
  REQUIRE(tab.size() == 6);
  for (const auto& s : tab) {
    CHECK(s.route == Route::model);
    CHECK(s.z0 == doctest::Approx(-s.x / (4 * s.t)));
    const cplx ref = leading_q(AsymptoticFrame::make(s.x, s.t), sech_r()).q;
    CHECK(std::abs(s.q - ref) <= 1e-8 * std::abs(ref));
  }
}
