#include "nlsdbar/pde.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>

#include "nlsdbar/asymptotics.hpp"
#include "nlsdbar/error.hpp"

namespace nlsdbar {

namespace {

// FFTW's planner is not reentrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

bool power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

std::vector<double> wavenumbers(const Grid1D& g) {
  const std::size_t n = g.n;
  const double base = 2.0 * pi / (static_cast<double>(n) * g.dx);
  std::vector<double> k(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double m = j < n / 2 ? static_cast<double>(j) : static_cast<double>(j) - static_cast<double>(n);
    k[j] = base * m;
  }
  return k;
}

fftw_complex* as_fftw(cplx* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

void EvolutionConfig::validate() const {
  grid.validate();
  if (!power_of_two(grid.n)) throw DomainError("EvolutionConfig: grid.n must be a power of two");
  if (!(dt > 0.0) || !(t_final > 0.0)) throw DomainError("EvolutionConfig: dt and t_final must be positive");
  if (dt > stability_limit()) {
    std::ostringstream os;
    os << "EvolutionConfig: dt = " << dt << " exceeds dx^2/pi = " << stability_limit();
    throw DomainError(os.str());
  }
  if (!(wrap_tol > 0.0)) throw DomainError("EvolutionConfig: wrap_tol must be positive");
  if (wrap_check_every == 0) throw DomainError("EvolutionConfig: wrap_check_every must be positive");
}

double EvolutionConfig::stability_limit() const { return grid.dx * grid.dx / pi; }

EvolutionConfig EvolutionConfig::sized_for(double t_final, double z_max, std::size_t n, double dt) {
  EvolutionConfig c;
  c.grid = Grid1D::periodic(std::max(20.0, 4.0 * z_max * t_final), n);
  c.dt = dt;
  c.t_final = t_final;
  return c;
}

struct SplitStepSolver::Plans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  std::vector<cplx> linear;  // e^{-i k^2 dt} / n, masked
  std::vector<double> mask;
  ~Plans() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
  }
};

SplitStepSolver::SplitStepSolver(const SampledField& q0, const EvolutionConfig& cfg)
    : cfg_(cfg), q_(q0.values), k_(wavenumbers(cfg.grid)), plans_(std::make_unique<Plans>()) {
  cfg_.validate();
  q0.validate();
  if (q0.grid.n != cfg.grid.n || q0.grid.dx != cfg.grid.dx || q0.grid.x_min != cfg.grid.x_min)
    throw DomainError("SplitStepSolver: q0 is not sampled on the solver grid");
  const int n = static_cast<int>(cfg_.grid.n);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plans_->forward = fftw_plan_dft_1d(n, as_fftw(q_.data()), as_fftw(q_.data()), FFTW_FORWARD,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_->backward = fftw_plan_dft_1d(n, as_fftw(q_.data()), as_fftw(q_.data()), FFTW_BACKWARD,
                                        FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  if (!plans_->forward || !plans_->backward) throw NumericalFailure("SplitStepSolver: FFT planning failed");
  const double k_nyq = pi / cfg_.grid.dx;
  plans_->mask.assign(q_.size(), 1.0);
  plans_->linear.resize(q_.size());
  for (std::size_t j = 0; j < q_.size(); ++j) {
    if (cfg_.dealias && std::abs(k_[j]) > (2.0 / 3.0) * k_nyq) plans_->mask[j] = 0.0;
    plans_->linear[j] =
        std::polar(plans_->mask[j] / static_cast<double>(n), -k_[j] * k_[j] * cfg_.dt);
  }
  check_wrap();
}

SplitStepSolver::~SplitStepSolver() = default;

void SplitStepSolver::step(double h) {
  for (cplx& v : q_) v *= std::polar(1.0, -std::norm(v) * h);
  fftw_execute_dft(plans_->forward, as_fftw(q_.data()), as_fftw(q_.data()));
  if (h == cfg_.dt) {
    for (std::size_t j = 0; j < q_.size(); ++j) q_[j] *= plans_->linear[j];
  } else {
    const double scale = 1.0 / static_cast<double>(q_.size());
    for (std::size_t j = 0; j < q_.size(); ++j)
      q_[j] *= std::polar(plans_->mask[j] * scale, -k_[j] * k_[j] * h);
  }
  fftw_execute_dft(plans_->backward, as_fftw(q_.data()), as_fftw(q_.data()));
  for (cplx& v : q_) v *= std::polar(1.0, -std::norm(v) * h);
}

void SplitStepSolver::check_wrap() const {
  const std::size_t n = q_.size();
  const std::size_t band = std::max<std::size_t>(1, n / 100);
  double edge = 0.0;
  for (std::size_t j = 0; j < band; ++j)
    edge = std::max({edge, std::abs(q_[j]), std::abs(q_[n - 1 - j])});
  if (edge <= cfg_.wrap_tol) return;
  // Radiation at wavenumber k travels with speed 2|k|; size the window from
  // the widest wavenumber carrying appreciable energy.
  std::vector<cplx> spec(q_);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), as_fftw(spec.data()), as_fftw(spec.data()),
                                   FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_execute(p);
    fftw_destroy_plan(p);
  }
  double peak = 0.0;
  for (const cplx& s : spec) peak = std::max(peak, std::abs(s));
  double k_max = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    if (std::abs(spec[j]) > 1e-6 * peak) k_max = std::max(k_max, std::abs(k_[j]));
  const double half = 0.5 * cfg_.grid.dx * static_cast<double>(n);
  const double required = std::max(2.0 * half, 2.0 * k_max * cfg_.t_final + half);
  std::ostringstream os;
  os << "split-step: |q| = " << edge << " in the outer 1% of the window at t = " << t_
     << " (wrap_tol " << cfg_.wrap_tol << "); need half-width about " << required;
  throw WindowTooSmall(os.str(), required);
}

void SplitStepSolver::advance_to(double t) {
  if (t < t_) throw DomainError("advance_to: time must not decrease");
  while (t - t_ > 1e-12 * std::max(1.0, t)) {
    const double h = std::min(cfg_.dt, t - t_);
    step(h);
    t_ = (t - t_ - h <= 1e-12 * std::max(1.0, t)) ? t : t_ + h;
    if (++steps_ % cfg_.wrap_check_every == 0) check_wrap();
  }
  check_wrap();
}

SampledField split_step_evolve(const SampledField& q0, const EvolutionConfig& cfg) {
  SplitStepSolver s(q0, cfg);
  s.advance_to(cfg.t_final);
  return s.snapshot();
}

double l2_norm(const SampledField& q) {
  double s = 0.0;
  for (const cplx& v : q.values) s += std::norm(v);
  return std::sqrt(s * q.grid.dx);
}

double momentum(const SampledField& q) {
  const std::size_t n = q.values.size();
  std::vector<cplx> d(q.values);
  const auto k = wavenumbers(q.grid);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_plan f = fftw_plan_dft_1d(static_cast<int>(n), as_fftw(d.data()), as_fftw(d.data()),
                                   FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_plan b = fftw_plan_dft_1d(static_cast<int>(n), as_fftw(d.data()), as_fftw(d.data()),
                                   FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_execute(f);
    for (std::size_t j = 0; j < n; ++j) {
      // drop the unpaired Nyquist mode so the derivative stays real-symmetric
      const double kj = (n % 2 == 0 && j == n / 2) ? 0.0 : k[j];
      d[j] *= I * kj / static_cast<double>(n);
    }
    fftw_execute(b);
    fftw_destroy_plan(f);
    fftw_destroy_plan(b);
  }
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) s += std::imag(std::conj(q.values[j]) * d[j]);
  return s * q.grid.dx;
}

cplx gaussian_free_solution(cplx amplitude, double width, double x, double t) {
  const double w2 = width * width;
  return amplitude / std::sqrt(1.0 + 4.0 * I * t / w2) * std::exp(-x * x / (w2 + 4.0 * I * t));
}

ComparisonReport compare_asymptotic(const SampledField& q0, const ReflectionCoefficient& r,
                                    double x_probe, const std::vector<double>& ts,
                                    const EvolutionConfig& cfg) {
  if (!std::is_sorted(ts.begin(), ts.end())) throw DomainError("compare_asymptotic: ts must increase");
  if (!ts.empty() && ts.front() <= 0.0) throw DomainError("compare_asymptotic: ts must be positive");
  ComparisonReport rep;
  EvolutionConfig run = cfg;
  if (!ts.empty()) run.t_final = std::max(run.t_final, ts.back());
  SplitStepSolver solver(q0, run);

  const Grid1D& g = run.grid;
  const double pos = (x_probe - g.x_min) / g.dx;
  const auto j0 = static_cast<std::size_t>(std::floor(pos));
  if (pos < 0.0 || j0 >= g.n) throw DomainError("compare_asymptotic: x_probe outside the window");
  const double frac = pos - static_cast<double>(j0);
  const std::size_t j1 = (j0 + 1) % g.n;

  std::vector<double> err_t, err_v;
  double prev_phase = 0.0;
  bool have_phase = false;
  for (double t : ts) {
    solver.advance_to(t);
    const auto& q = solver.values();
    const cplx qn = (1.0 - frac) * q[j0] + frac * q[j1];
    const AsymptoticFrame fr = AsymptoticFrame::make(x_probe, t);
    const LeadingTerm lt = leading_q(fr, r);
    if (lt.degenerate) rep.degenerate = true;
    ComparisonRow row{t, qn, lt.q, std::abs(qn - lt.q)};
    rep.rows.push_back(row);
    if (row.abs_error > 0.0) {
      err_t.push_back(t);
      err_v.push_back(row.abs_error);
    }
    if (!lt.degenerate && qn != cplx(0.0)) {
      // arg q_num - [x^2/4t + arg alpha - nu log 8t] = arg(q_num / q_asym)
      double ph = std::arg(qn / lt.q);
      if (have_phase) ph = prev_phase + std::remainder(ph - prev_phase, 2.0 * pi);
      prev_phase = ph;
      have_phase = true;
      rep.phase_offset.push_back(ph);
    }
  }
  if (!ts.empty()) {
    const double z0 = -x_probe / (4.0 * ts.front());
    if (r(z0) != cplx(0.0)) {
      const AsymptoticCoefficient c = asymptotic_coefficient(z0, r);
      rep.nu0 = c.nu;
      rep.alpha = c.alpha;
      rep.modulus_target = std::sqrt(0.5 * c.nu);
    }
  }
  if (!rep.phase_offset.empty()) {
    const auto [lo, hi] = std::minmax_element(rep.phase_offset.begin(), rep.phase_offset.end());
    rep.phase_drift = *hi - *lo;
  }
  rep.error_fit.exponent = std::numeric_limits<double>::quiet_NaN();
  if (err_t.size() >= 3) rep.error_fit = fit_decay(err_t, err_v, 3);
  return rep;
}

}  // namespace nlsdbar
