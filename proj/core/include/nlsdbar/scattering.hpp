#pragma once

#include <vector>

#include "nlsdbar/grid.hpp"
#include "nlsdbar/reflection.hpp"
#include "nlsdbar/types.hpp"

namespace nlsdbar {

/// Zakharov-Shabat convention used throughout:
///   psi' = (-i z sigma3 + [[0, q], [conj q, 0]]) psi,
/// psi_- ~ exp(-i z x sigma3) as x -> -inf, and as x -> +inf the first column
/// of psi_- is a e^{-izx} e1 + b e^{izx} e2. r = b / a.
/// To first order in q, b(z) = int conj(q(x)) e^{-2izx} dx.
struct ScatteringPair {
  cplx a{1.0};
  cplx b{0.0};
};

struct ScatteringData {
  std::vector<double> z_grid;
  std::vector<cplx> a;
  std::vector<cplx> b;

  /// max_z | |a|^2 - |b|^2 - 1 |
  double max_unitarity_defect() const;
};

/// Default spectral grid: [-8, 8] with 1601 nodes.
std::vector<double> default_z_grid();

/// Transfer-matrix entries for the sampled potential. Each sample is taken
/// as constant on the cell [x_k - dx/2, x_k + dx/2] and the cell is crossed
/// with the exact 2x2 exponential; the scheme is second order in dx for
/// smooth q and exact for cell-aligned piecewise-constant q.
/// Throws InvariantViolation if the boundary samples exceed decay_tol and
/// NumericalFailure (estimate = z) if the result is not finite.
ScatteringPair jost_scatter(const SampledField& q0, double z, double decay_tol = 1e-8);

/// Closed form for q0 = A on [-L/2, L/2]:
///   b = conj(A) sinh(kL)/k,  a = e^{izL}(cosh kL - iz sinh(kL)/k),  k^2 = |A|^2 - z^2.
ScatteringPair box_oracle(cplx amplitude, double length, double z);

/// jost_scatter over a grid, evaluated in parallel.
ScatteringData scatter_grid(const SampledField& q0, const std::vector<double>& z_grid,
                            double decay_tol = 1e-8);

/// r = b/a with finite-difference r'. Throws InvariantViolation if the
/// unitarity defect exceeds unitarity_tol or sup|r| >= 1.
ReflectionCoefficient reflection_from(const ScatteringData& data, double unitarity_tol = 1e-8,
                                      double decay_tol = 1e-8);

ReflectionCoefficient reflection_grid(const SampledField& q0, const std::vector<double>& z_grid,
                                      double unitarity_tol = 1e-8, double decay_tol = 1e-8);

/// First Born approximation r(z) ~ int conj(q0(x)) e^{-2izx} dx, with the
/// same piecewise-constant cell model as jost_scatter.
cplx born_oracle(const SampledField& q0, double z);

/// Samples q on a grid covering its support (|q| < decay_tol outside) with spacing dx.
SampledField sample_potential(const Potential& q, double dx, double decay_tol = 1e-10);

}  // namespace nlsdbar
