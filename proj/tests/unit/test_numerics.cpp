#include <doctest.h>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "nlsdbar/csv.hpp"
#include "nlsdbar/error.hpp"
#include "nlsdbar/fit.hpp"
#include "nlsdbar/grid.hpp"
#include "nlsdbar/parallel.hpp"
#include "nlsdbar/quadrature.hpp"
#include "nlsdbar/reflection.hpp"

using namespace nlsdbar;

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  for (int n : {2, 7, 12, 20}) {
    const auto& rule = quad::gauss_legendre(n);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    CHECK(std::abs(wsum - 2.0) < 1e-14);
    const int deg = 2 * n - 1;
    const double v = quad::fixed_gauss([deg](double x) { return std::pow(x, deg - 1); }, 0.0, 1.0, n);
    CHECK(std::abs(v - 1.0 / deg) < 1e-14);
  }
}

TEST_CASE("adaptive quadrature handles endpoint singularities") {
  auto r = quad::integrate([](double x) { return std::log(x); }, 0.0, 1.0, 1e-12, 1e-12);
  CHECK(r.converged);
  CHECK(std::abs(r.value + 1.0) < 1e-10);

  auto s = quad::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 4.0, 1e-6, 0.0);
  CHECK(s.converged);
  CHECK(std::abs(s.value - 4.0) < 1e-6);
}

TEST_CASE("adaptive quadrature on complex integrands with breakpoints") {
  const std::vector<double> br{-1.0, 0.0, 2.0};
  auto r = quad::integrate_panels([](double x) { return std::exp(cplx(0.0, 3.0 * x)) * std::abs(x); },
                                  br, 1e-13, 1e-13);
  // int_{-1}^{2} |x| e^{3ix} dx in closed form
  auto prim = [](double x) { return std::exp(cplx(0.0, 3.0 * x)) * (x / cplx(0.0, 3.0) + 1.0 / 9.0); };
  const cplx exact = (prim(2.0) - prim(0.0)) - (prim(0.0) - prim(-1.0));
  CHECK(r.converged);
  CHECK(std::abs(r.value - exact) < 1e-12);
}

TEST_CASE("quadrature reports non-convergence when the budget runs out") {
  auto r = quad::integrate([](double x) { return std::sin(1.0 / (x + 1e-9)); }, 0.0, 1.0, 1e-14, 0.0, 50);
  CHECK_FALSE(r.converged);
}

TEST_CASE("fit_decay recovers exact power laws") {
  std::vector<double> ts, v1, v2;
  for (int k = 0; k < 8; ++k) {
    const double t = 10.0 * std::pow(2.0, k);
    ts.push_back(t);
    v1.push_back(std::pow(t, -0.5));
    v2.push_back(3.0 * std::pow(t, -0.75));
  }
  const DecayFit a = fit_decay(ts, v1);
  CHECK(std::abs(a.exponent + 0.5) < 1e-12);
  CHECK(std::abs(a.r_squared - 1.0) < 1e-12);
  const DecayFit b = fit_decay(ts, v2);
  CHECK(std::abs(b.exponent + 0.75) < 1e-12);
  CHECK(std::abs(b.intercept - std::log(3.0)) < 1e-12);
}

TEST_CASE("fit_decay on a noisy power law") {
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> noise(-0.01, 0.01);
  std::vector<double> ts, v;
  for (int k = 0; k < 12; ++k) {
    const double t = 100.0 * std::pow(10.0, k / 4.0);
    ts.push_back(t);
    v.push_back(std::pow(t, -0.25) * (1.0 + noise(gen)));
  }
  const DecayFit f = fit_decay(ts, v);
  CHECK(std::abs(f.exponent + 0.25) < 0.02);
  CHECK(f.r_squared >= 0.0);
  CHECK(f.r_squared <= 1.0);
}

TEST_CASE("fit_decay rejects bad input") {
  const std::vector<double> ts{1, 2, 3, 4, 5};
  CHECK_THROWS_AS(fit_decay(ts, {1, 2, 0, 4, 5}), DomainError);
  CHECK_THROWS_AS(fit_decay(ts, {1, 2, -1, 4, 5}), DomainError);
  CHECK_THROWS_AS(fit_decay({1, 2, 3}, {1, 2, 3}), DomainError);
}

TEST_CASE("Grid1D and SampledField invariants") {
  const Grid1D g = Grid1D::periodic(10.0, 64);
  CHECK(g.x(0) == doctest::Approx(-10.0));
  CHECK(g.dx == doctest::Approx(20.0 / 64));
  CHECK_THROWS_AS((Grid1D{0.0, 0.0, 4}.validate()), DomainError);
  CHECK_THROWS_AS((Grid1D{0.0, 1.0, 1}.validate()), DomainError);
  CHECK_THROWS_AS(SampledField(g, std::vector<cplx>(3)), DomainError);

  const auto f = SampledField::sample(g, [](double x) { return cplx(std::exp(-x * x)); });
  CHECK(f.boundary_decayed(1e-8));
  const auto h = SampledField::sample(g, [](double x) { return cplx(1.0 / std::cosh(x / 4)); });
  CHECK_FALSE(h.boundary_decayed(1e-8));
}

TEST_CASE("potential sampling covers the support") {
  const Potential p = Potential::sech(0.5);
  CHECK(std::abs(p(0.0) - 0.5) < 1e-15);
  const double L = p.support_half_width(1e-10);
  CHECK(std::abs(p(L)) < 1e-10);
  CHECK(Potential::parse_type("gaussian") == PotentialType::gaussian);
  CHECK_THROWS_AS(Potential::parse_type("triangle"), DomainError);
}

TEST_CASE("file potentials are read and interpolated") {
  const std::string path = "nlsdbar_test_potential.txt";
  {
    std::ofstream out(path);
    out << "# x re im\n-1 0 0\n0 1 0.5\n1 0 0\n";
  }
  const Potential p = Potential::from_file(path);
  CHECK(std::abs(p(0.5) - cplx(0.5, 0.25)) < 1e-15);
  CHECK(std::abs(p(3.0)) == 0.0);
  std::remove(path.c_str());
  CHECK_THROWS_AS(Potential::from_file("does/not/exist.txt"), Error);
}

TEST_CASE("Hermite interpolant reproduces cubics") {
  const auto z = linspace(-2.0, 2.0, 9);
  std::vector<cplx> r, rp;
  for (double s : z) {
    r.push_back(cplx(0.01 * s * s * s, -0.02 * s * s));
    rp.push_back(cplx(0.03 * s * s, -0.04 * s));
  }
  const auto R = ReflectionCoefficient::with_derivative(z, r, rp, 1.0);
  for (double s : {-1.77, -0.3, 0.0, 0.41, 1.999}) {
    CHECK(std::abs(R(s) - cplx(0.01 * s * s * s, -0.02 * s * s)) < 1e-15);
    CHECK(std::abs(R.derivative(s) - cplx(0.03 * s * s, -0.04 * s)) < 1e-14);
  }
  CHECK(R(2.5) == cplx(0.0));
}

TEST_CASE("finite-difference r' is second order on nonuniform grids") {
  auto err_for = [](std::size_t n) {
    std::vector<double> z;
    for (std::size_t k = 0; k < n; ++k) {
      const double u = -1.0 + 2.0 * k / (n - 1.0);
      z.push_back(u + 0.1 * std::sin(3.0 * u) / n);
    }
    std::vector<cplx> f;
    for (double s : z) f.push_back(std::exp(cplx(0.0, 2.0 * s)));
    const auto d = finite_difference_derivative(z, f);
    double e = 0.0;
    for (std::size_t k = 0; k < n; ++k) e = std::max(e, std::abs(d[k] - cplx(0.0, 2.0) * f[k]));
    return e;
  };
  const double p = std::log2(err_for(101) / err_for(201));
  CHECK(p > 1.8);
}

TEST_CASE("ReflectionCoefficient invariants") {
  const auto z = linspace(-8.0, 8.0, 101);
  std::vector<cplx> r(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) r[k] = 0.995 * std::exp(-z[k] * z[k]);
  const auto R = ReflectionCoefficient::from_samples(z, r);
  CHECK(R.rho == doctest::Approx(0.995));
  CHECK_FALSE(R.warnings.empty());

  r[50] = 1.0;
  CHECK_THROWS_AS(ReflectionCoefficient::from_samples(z, r), InvariantViolation);

  CHECK(ReflectionCoefficient::zero().is_zero());
}

TEST_CASE("parallel_for is complete and independent of the worker count") {
  std::vector<double> a(1000), b(1000);
  set_thread_count(1);
  parallel_for(a.size(), [&](std::size_t i) { a[i] = std::sin(static_cast<double>(i)); });
  set_thread_count(4);
  parallel_for(b.size(), [&](std::size_t i) { b[i] = std::sin(static_cast<double>(i)); });
  CHECK(a == b);
  CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) {
                    if (i == 7) throw DomainError("x");
                  }),
                  DomainError);
  set_thread_count(0);
}

TEST_CASE("CsvWriter prints round-trip doubles") {
  const std::string path = "nlsdbar_test.csv";
  {
    CsvWriter w(path, {"a", "b"});
    w << 0.1 << std::string("x");
    w.end_row();
  }
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "a,b\n0.10000000000000001,x\n");
  std::remove(path.c_str());
}
