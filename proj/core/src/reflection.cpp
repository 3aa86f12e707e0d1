#include "nlsdbar/reflection.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nlsdbar/error.hpp"

namespace nlsdbar {

namespace {

void check_grid(const std::vector<double>& z, std::size_t n_values) {
  if (z.size() < 3) throw DomainError("reflection: need at least 3 spectral nodes");
  if (z.size() != n_values) throw DomainError("reflection: z_grid and r lengths differ");
  for (std::size_t k = 0; k + 1 < z.size(); ++k)
    if (!(z[k + 1] > z[k])) throw DomainError("reflection: z_grid must be strictly increasing");
}

void finish(ReflectionCoefficient& rc, double decay_tol) {
  rc.rho = 0.0;
  for (const cplx& v : rc.r) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw InvariantViolation("reflection: non-finite sample");
    rc.rho = std::max(rc.rho, std::abs(v));
  }
  if (rc.rho >= 1.0) {
    std::ostringstream os;
    os << "reflection: sup|r| = " << rc.rho << " >= 1";
    throw InvariantViolation(os.str());
  }
  if (rc.rho > 0.99) {
    std::ostringstream os;
    os << "sup|r| = " << rc.rho << " exceeds 0.99";
    rc.warnings.push_back(os.str());
  }
  const double ends = std::max(std::abs(rc.r.front()), std::abs(rc.r.back()));
  if (ends > decay_tol) {
    std::ostringstream os;
    os << "|r| at the grid ends is " << ends << ", above decay_tol " << decay_tol;
    rc.warnings.push_back(os.str());
  }
}

}  // namespace

std::vector<cplx> finite_difference_derivative(const std::vector<double>& z,
                                               const std::vector<cplx>& f) {
  const std::size_t n = z.size();
  if (n < 3 || f.size() != n) throw DomainError("finite_difference_derivative: need >= 3 matching samples");
  std::vector<cplx> d(n);
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const double h1 = z[k] - z[k - 1], h2 = z[k + 1] - z[k];
    d[k] = -h2 / (h1 * (h1 + h2)) * f[k - 1] + (h2 - h1) / (h1 * h2) * f[k] +
           h1 / (h2 * (h1 + h2)) * f[k + 1];
  }
  {
    const double h1 = z[1] - z[0], h2 = z[2] - z[1];
    d[0] = -(2 * h1 + h2) / (h1 * (h1 + h2)) * f[0] + (h1 + h2) / (h1 * h2) * f[1] -
           h1 / (h2 * (h1 + h2)) * f[2];
  }
  {
    const double h1 = z[n - 2] - z[n - 3], h2 = z[n - 1] - z[n - 2];
    d[n - 1] = (2 * h2 + h1) / (h2 * (h1 + h2)) * f[n - 1] - (h1 + h2) / (h1 * h2) * f[n - 2] +
               h2 / (h1 * (h1 + h2)) * f[n - 3];
  }
  return d;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n < 2) throw DomainError("linspace: need n >= 2");
  std::vector<double> out(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) out[k] = lo + static_cast<double>(k) * step;
  out.back() = hi;
  return out;
}

ReflectionCoefficient ReflectionCoefficient::from_samples(std::vector<double> z,
                                                          std::vector<cplx> r,
                                                          double decay_tol) {
  check_grid(z, r.size());
  auto rp = finite_difference_derivative(z, r);
  ReflectionCoefficient rc;
  rc.z_grid = std::move(z);
  rc.r = std::move(r);
  rc.r_prime = std::move(rp);
  finish(rc, decay_tol);
  return rc;
}

ReflectionCoefficient ReflectionCoefficient::with_derivative(std::vector<double> z,
                                                             std::vector<cplx> r,
                                                             std::vector<cplx> r_prime,
                                                             double decay_tol) {
  check_grid(z, r.size());
  if (r_prime.size() != r.size()) throw DomainError("reflection: r_prime length differs");
  ReflectionCoefficient rc;
  rc.z_grid = std::move(z);
  rc.r = std::move(r);
  rc.r_prime = std::move(r_prime);
  finish(rc, decay_tol);
  return rc;
}

ReflectionCoefficient ReflectionCoefficient::zero() {
  return from_samples({-8.0, 0.0, 8.0}, std::vector<cplx>(3, 0.0));
}

std::size_t ReflectionCoefficient::cell(double s) const {
  auto it = std::upper_bound(z_grid.begin(), z_grid.end(), s);
  std::size_t k = it == z_grid.begin() ? 0 : static_cast<std::size_t>(it - z_grid.begin()) - 1;
  return std::min(k, z_grid.size() - 2);
}

void ReflectionCoefficient::eval(double s, cplx& value, cplx& deriv) const {
  if (!(s >= z_grid.front() && s <= z_grid.back())) {
    value = 0.0;
    deriv = 0.0;
    return;
  }
  const std::size_t k = cell(s);
  const double h = z_grid[k + 1] - z_grid[k];
  const double t = (s - z_grid[k]) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
  value = h00 * r[k] + (h10 * h) * r_prime[k] + h01 * r[k + 1] + (h11 * h) * r_prime[k + 1];
  const double d00 = (6 * t2 - 6 * t) / h, d10 = 3 * t2 - 4 * t + 1;
  const double d01 = (6 * t - 6 * t2) / h, d11 = 3 * t2 - 2 * t;
  deriv = d00 * r[k] + d10 * r_prime[k] + d01 * r[k + 1] + d11 * r_prime[k + 1];
}

cplx ReflectionCoefficient::operator()(double s) const {
  cplx v, d;
  eval(s, v, d);
  return v;
}

cplx ReflectionCoefficient::derivative(double s) const {
  cplx v, d;
  eval(s, v, d);
  return d;
}

double ReflectionCoefficient::w(double s) const {
  const double a2 = std::norm((*this)(s));
  if (a2 >= 1.0) throw InvariantViolation("reflection: interpolated |r| reached 1");
  return std::log1p(-a2);
}

double ReflectionCoefficient::w_prime(double s) const {
  cplx v, d;
  eval(s, v, d);
  const double a2 = std::norm(v);
  if (a2 >= 1.0) throw InvariantViolation("reflection: interpolated |r| reached 1");
  return -2.0 * std::real(std::conj(v) * d) / (1.0 - a2);
}

}  // namespace nlsdbar
