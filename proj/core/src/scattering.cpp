#include "nlsdbar/scattering.hpp"

#include <cmath>
#include <sstream>

#include "nlsdbar/error.hpp"
#include "nlsdbar/parallel.hpp"

namespace nlsdbar {

namespace {

// exp(A h) = C I + S A for A = [[-iz, q], [conj q, iz]], A^2 = k2 I.
struct CellFactors {
  double c;
  double s;
};

CellFactors cell_factors(double k2, double h) {
  const double x = k2 * h * h;
  if (std::abs(x) < 1e-10) return {1.0 + 0.5 * x, h * (1.0 + x / 6.0)};
  if (k2 > 0.0) {
    const double k = std::sqrt(k2);
    return {std::cosh(k * h), std::sinh(k * h) / k};
  }
  const double kappa = std::sqrt(-k2);
  return {std::cos(kappa * h), std::sin(kappa * h) / kappa};
}

}  // namespace

double ScatteringData::max_unitarity_defect() const {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    worst = std::max(worst, std::abs(std::norm(a[k]) - std::norm(b[k]) - 1.0));
  return worst;
}

std::vector<double> default_z_grid() { return linspace(-8.0, 8.0, 1601); }

ScatteringPair jost_scatter(const SampledField& q0, double z, double decay_tol) {
  q0.validate();
  if (!std::isfinite(z)) throw DomainError("jost_scatter: z must be finite");
  if (!q0.boundary_decayed(decay_tol))
    throw InvariantViolation("jost_scatter: boundary samples of q0 exceed decay_tol");
  const double dx = q0.grid.dx;
  const double x_left = q0.grid.x_min - 0.5 * dx;
  const double x_right = q0.grid.x_max() + 0.5 * dx;
  cplx p1 = std::polar(1.0, -z * x_left), p2 = 0.0;
  const cplx iz = I * z;
  for (const cplx& q : q0.values) {
    const auto [c, s] = cell_factors(std::norm(q) - z * z, dx);
    const cplx n1 = c * p1 + s * (-iz * p1 + q * p2);
    const cplx n2 = c * p2 + s * (std::conj(q) * p1 + iz * p2);
    p1 = n1;
    p2 = n2;
  }
  ScatteringPair out{std::polar(1.0, z * x_right) * p1, std::polar(1.0, -z * x_right) * p2};
  if (!std::isfinite(std::abs(out.a)) || !std::isfinite(std::abs(out.b))) {
    std::ostringstream os;
    os << "jost_scatter: non-finite transfer matrix at z = " << z;
    throw NumericalFailure(os.str(), z);
  }
  return out;
}

ScatteringPair box_oracle(cplx amplitude, double length, double z) {
  if (!(length > 0.0)) throw DomainError("box_oracle: length must be positive");
  const auto [c, s] = cell_factors(std::norm(amplitude) - z * z, length);
  return {std::polar(1.0, z * length) * (c - I * z * s), std::conj(amplitude) * s};
}

ScatteringData scatter_grid(const SampledField& q0, const std::vector<double>& z_grid,
                            double decay_tol) {
  q0.validate();
  if (!q0.boundary_decayed(decay_tol))
    throw InvariantViolation("scatter_grid: boundary samples of q0 exceed decay_tol");
  ScatteringData out;
  out.z_grid = z_grid;
  out.a.resize(z_grid.size());
  out.b.resize(z_grid.size());
  parallel_for(z_grid.size(), [&](std::size_t k) {
    const ScatteringPair p = jost_scatter(q0, z_grid[k], decay_tol);
    out.a[k] = p.a;
    out.b[k] = p.b;
  });
  return out;
}

ReflectionCoefficient reflection_from(const ScatteringData& data, double unitarity_tol,
                                      double decay_tol) {
  const double defect = data.max_unitarity_defect();
  if (defect > unitarity_tol) {
    std::ostringstream os;
    os << "reflection: unitarity defect " << defect << " exceeds " << unitarity_tol;
    throw InvariantViolation(os.str());
  }
  std::vector<cplx> r(data.a.size());
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = data.b[k] / data.a[k];
  return ReflectionCoefficient::from_samples(data.z_grid, std::move(r), decay_tol);
}

ReflectionCoefficient reflection_grid(const SampledField& q0, const std::vector<double>& z_grid,
                                      double unitarity_tol, double decay_tol) {
  return reflection_from(scatter_grid(q0, z_grid, decay_tol), unitarity_tol, decay_tol);
}

cplx born_oracle(const SampledField& q0, double z) {
  q0.validate();
  const double dx = q0.grid.dx;
  // int over one cell of e^{-2izs} ds, centred at zero
  const double cell = std::abs(z * dx) < 1e-8 ? dx : std::sin(z * dx) / z;
  cplx sum = 0.0;
  for (std::size_t k = 0; k < q0.values.size(); ++k)
    sum += std::conj(q0.values[k]) * std::polar(1.0, -2.0 * z * q0.grid.x(k));
  return sum * cell;
}

SampledField sample_potential(const Potential& q, double dx, double decay_tol) {
  if (!(dx > 0.0)) throw DomainError("sample_potential: dx must be positive");
  const double half = q.support_half_width(decay_tol);
  const auto cells = static_cast<std::size_t>(std::ceil(half / dx));
  Grid1D g{-static_cast<double>(cells) * dx, dx, 2 * cells + 1};
  return SampledField::sample(g, [&](double x) { return q(x); });
}

}  // namespace nlsdbar
