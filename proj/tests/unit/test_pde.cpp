#include <doctest.h>

#include <cmath>

#include "nlsdbar/error.hpp"
#include "nlsdbar/fit.hpp"
#include "nlsdbar/pde.hpp"

using namespace nlsdbar;

namespace {

double max_diff(const SampledField& a, const SampledField& b) {
  double e = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k) e = std::max(e, std::abs(a.values[k] - b.values[k]));
  return e;
}

EvolutionConfig config(double half_width, std::size_t n, double dt, double t_final) {
  EvolutionConfig c;
  c.grid = Grid1D::periodic(half_width, n);
  c.dt = dt;
  c.t_final = t_final;
  return c;
}

SampledField moving_sech(const Grid1D& g) {
  return SampledField::sample(g, [](double x) { return 0.8 / std::cosh(x) * std::exp(cplx(0.0, 0.5 * x)); });
}

}  // namespace

TEST_CASE("configuration checks") {
  EvolutionConfig c = config(50.0, 1024, 1e-3, 1.0);
  CHECK_NOTHROW(c.validate());
  CHECK(c.stability_limit() == doctest::Approx(c.grid.dx * c.grid.dx / pi));
  c.dt = 2.0 * c.stability_limit();
  CHECK_THROWS_AS(c.validate(), DomainError);
  EvolutionConfig d = config(50.0, 1000, 1e-3, 1.0);
  CHECK_THROWS_AS(d.validate(), DomainError);
  const EvolutionConfig s = EvolutionConfig::sized_for(160.0, 4.5, 1 << 15, 0.005);
  CHECK(s.grid.x_min == doctest::Approx(-2880.0));
  CHECK_NOTHROW(s.validate());
}

TEST_CASE("zero data stays zero") {
  const EvolutionConfig c = config(20.0, 256, 1e-3, 0.5);
  const auto q0 = SampledField::sample(c.grid, [](double) { return cplx{}; });
  const auto q = split_step_evolve(q0, c);
  for (cplx v : q.values) CHECK(v == cplx(0.0));
}

TEST_CASE("small Gaussian follows the free evolution") {
  const EvolutionConfig c = config(100.0, 2048, 1e-3, 5.0);
  const auto q0 = SampledField::sample(c.grid, [](double x) { return cplx(1e-3 * std::exp(-x * x / 4.0)); });
  const auto q = split_step_evolve(q0, c);
  double err = 0.0, scale = 0.0;
  for (std::size_t k = 0; k < c.grid.n; ++k) {
    const cplx ex = gaussian_free_solution(1e-3, 2.0, c.grid.x(k), 5.0);
    err = std::max(err, std::abs(q.values[k] - ex));
    scale = std::max(scale, std::abs(ex));
  }
  CHECK(err / scale <= 1e-5);
  CHECK(std::abs(gaussian_free_solution(1e-3, 2.0, 0.0, 0.0) - 1e-3) < 1e-18);
}

TEST_CASE("conservation of mass and momentum") {
  const EvolutionConfig c = config(160.0, 4096, 1e-3, 4.0);
  const auto q0 = moving_sech(c.grid);
  const auto q = split_step_evolve(q0, c);
  CHECK(std::abs(l2_norm(q) / l2_norm(q0) - 1.0) <= 1e-10);
  CHECK(std::abs(momentum(q) / momentum(q0) - 1.0) <= 1e-6);
  // momentum of a e^{ikx} sech x is k * mass
  CHECK(momentum(q0) == doctest::Approx(0.5 * std::pow(l2_norm(q0), 2)).epsilon(1e-10));
}

TEST_CASE("Strang splitting is second order in dt") {
  EvolutionConfig c = config(160.0, 4096, 1e-3, 2.0);
  const auto q0 = moving_sech(c.grid);
  std::vector<SampledField> runs;
  const std::vector<double> dts{0.0016, 0.0008, 0.0004};
  for (double dt : dts) {
    c.dt = dt;
    runs.push_back(split_step_evolve(q0, c));
  }
  const double p = std::log2(max_diff(runs[0], runs[1]) / max_diff(runs[1], runs[2]));
  CHECK(p >= 1.9);
}

TEST_CASE("solver stepping") {
  const EvolutionConfig c = config(40.0, 512, 1e-3, 1.0);
  const auto q0 = moving_sech(c.grid);
  SplitStepSolver s(q0, c);
  s.advance_to(0.25);
  CHECK(s.time() == doctest::Approx(0.25));
  s.advance_to(0.2505);  // shortened final step
  CHECK(s.time() == doctest::Approx(0.2505));
  const auto snap = s.snapshot();
  CHECK(snap.values.size() == 512);
  CHECK(max_diff(split_step_evolve(q0, config(40.0, 512, 1e-3, 0.25)), split_step_evolve(q0, config(40.0, 512, 1e-3, 0.25))) == 0.0);
}

TEST_CASE("radiation reaching the edge is reported") {
  const EvolutionConfig c = config(100.0, 2048, 2e-3, 20.0);
  const auto q0 = SampledField::sample(c.grid, [](double x) { return cplx(0.8 / std::cosh(x)); });
  try {
    split_step_evolve(q0, c);
    FAIL("expected WindowTooSmall");
  } catch (const WindowTooSmall& e) {
    CHECK(e.required_half_width() > 100.0);
  }
}

TEST_CASE("comparison with zero data") {
  const EvolutionConfig c = config(40.0, 512, 1e-3, 1.0);
  const auto q0 = SampledField::sample(c.grid, [](double) { return cplx{}; });
  const auto rep = compare_asymptotic(q0, ReflectionCoefficient::zero(), 0.0, {1.0, 2.0, 3.0}, c);
  REQUIRE(rep.rows.size() == 3);
  for (const auto& row : rep.rows) CHECK(row.abs_error == 0.0);
  CHECK(rep.degenerate);
  CHECK(std::isnan(rep.error_fit.exponent));
}
