#pragma once

#include <memory>
#include <vector>

#include "nlsdbar/fit.hpp"
#include "nlsdbar/grid.hpp"
#include "nlsdbar/reflection.hpp"
#include "nlsdbar/types.hpp"

namespace nlsdbar {

/// Split-step run parameters for i q_t + q_xx - 2|q|^2 q = 0 on a periodic grid.
struct EvolutionConfig {
  Grid1D grid;
  double dt = 1e-3;
  double t_final = 1.0;
  bool dealias = false;        // zero |k| > (2/3) k_nyquist after each step
  double wrap_tol = 1e-6;      // max |q| allowed in the outer 1% of the window
  std::size_t wrap_check_every = 100;

  /// n must be a power of two, dt > 0, t_final > 0 and dt <= stability_limit().
  void validate() const;

  /// dt * k_nyquist^2 <= pi, i.e. dt <= dx^2 / pi: the linear phase per step
  /// stays below pi at the highest resolved wavenumber.
  double stability_limit() const;

  /// Window of half-width max(20, 4 z_max t_final) with n points.
  static EvolutionConfig sized_for(double t_final, double z_max, std::size_t n, double dt);
};

/// Strang splitting: half nonlinear step q e^{-2i|q|^2 dt/2}, exact linear step
/// e^{-i k^2 dt} in Fourier space, half nonlinear step.
class SplitStepSolver {
 public:
  SplitStepSolver(const SampledField& q0, const EvolutionConfig& cfg);
  ~SplitStepSolver();
  SplitStepSolver(const SplitStepSolver&) = delete;
  SplitStepSolver& operator=(const SplitStepSolver&) = delete;

  /// Steps until time() == t (the last step is shortened if needed).
  /// Throws WindowTooSmall when radiation reaches the window edge.
  void advance_to(double t);

  double time() const { return t_; }
  const std::vector<cplx>& values() const { return q_; }
  SampledField snapshot() const { return {cfg_.grid, q_}; }

 private:
  void step(double h);
  void check_wrap() const;

  struct Plans;
  EvolutionConfig cfg_;
  std::vector<cplx> q_;
  std::vector<double> k_;
  std::unique_ptr<Plans> plans_;
  double t_ = 0.0;
  std::size_t steps_ = 0;
};

SampledField split_step_evolve(const SampledField& q0, const EvolutionConfig& cfg);

/// sqrt(sum |q|^2 dx).
double l2_norm(const SampledField& q);
/// Im sum conj(q) q_x dx with the spectral derivative.
double momentum(const SampledField& q);

/// Free Schrodinger evolution of A exp(-x^2/w^2):
///   A / sqrt(1 + 4it/w^2) exp(-x^2 / (w^2 + 4it)).
cplx gaussian_free_solution(cplx amplitude, double width, double x, double t);

struct ComparisonRow {
  double t;
  cplx q_num;
  cplx q_asym;
  double abs_error;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  bool degenerate = false;
  double nu0 = 0.0;             // at z0 = -x_probe / (4 ts[0])
  cplx alpha{0.0};
  double modulus_target = 0.0;  // sqrt(nu0 / 2)
  DecayFit error_fit;           // over all rows; exponent NaN if not fittable
  /// arg q_num - [x^2/(4t) + arg alpha - nu log 8t], unwrapped along rows
  std::vector<double> phase_offset;
  double phase_drift = 0.0;     // max - min of phase_offset
};

/// Evolves q0 once, sampling the solution at x_probe (linear interpolation
/// between grid points) for each t, and compares with the leading term built
/// from r.
ComparisonReport compare_asymptotic(const SampledField& q0, const ReflectionCoefficient& r,
                                    double x_probe, const std::vector<double>& ts,
                                    const EvolutionConfig& cfg);

}  // namespace nlsdbar
