#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>

#include "nlsdbar/asymptotics.hpp"
#include "nlsdbar/csv.hpp"
#include "nlsdbar/dbar.hpp"
#include "nlsdbar/error.hpp"
#include "nlsdbar/fit.hpp"
#include "nlsdbar/model_rhp.hpp"
#include "nlsdbar/pde.hpp"
#include "nlsdbar/phase.hpp"
#include "nlsdbar/scattering.hpp"

namespace nlslab {

using namespace nlsdbar;

namespace {

const std::map<std::string, Command>& command_table() {
  static const std::map<std::string, Command> t = {
      {"scatter", Command::scatter}, {"phase", Command::phase},     {"model-check", Command::model_check},
      {"asymptote", Command::asymptote}, {"evolve", Command::evolve}, {"compare", Command::compare},
      {"dbar", Command::dbar},       {"all", Command::all},
  };
  return t;
}

// Shared, lazily computed inputs so that `all` scatters the potential once.
class Lab {
 public:
  explicit Lab(const ExperimentConfig& cfg) : cfg(cfg) {}

  const ExperimentConfig& cfg;

  const SampledField& samples() {
    if (!samples_) samples_ = sample_potential(cfg.potential, cfg.dx);
    return *samples_;
  }
  const ScatteringData& data() {
    if (!data_) data_ = scatter_grid(samples(), cfg.z_grid());
    return *data_;
  }
  const ReflectionCoefficient& r() {
    if (!r_) r_ = reflection_from(data(), cfg.unitarity_tol);
    return *r_;
  }
  // Empty when no artifacts are wanted.
  std::string path(const std::string& name) const {
    return cfg.out_dir.empty() ? std::string() : (std::filesystem::path(cfg.out_dir) / name).string();
  }

 private:
  std::optional<SampledField> samples_;
  std::optional<ScatteringData> data_;
  std::optional<ReflectionCoefficient> r_;
};

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <class F>
void guarded(Summary& s, const std::string& step, int criterion, F&& body) {
  try {
    body();
  } catch (const nlsdbar::Error& e) {
    Check c = Check::at_most(step, kNaN, 0.0, criterion);
    c.note = e.what();
    s.add(std::move(c));
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string r0_label(cplx r0) {
  if (r0.imag() == 0.0) return "r0=" + fmt(r0.real());
  return "r0=" + fmt(std::abs(r0)) + "@" + fmt(std::arg(r0));
}

std::vector<cplx> complex_sample(double z0) {
  std::vector<cplx> zs;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      const double rad = std::pow(10.0, -2.0 + 4.0 * i / 9.0);
      const double ang = -pi + 2.0 * pi * (j + 0.5) / 10.0;
      zs.push_back(z0 + std::polar(rad, ang));
    }
  return zs;
}

std::vector<cplx> off_contour_points() {
  std::vector<cplx> out;
  for (double rad : {0.3, 1.0, 2.5, 6.0})
    for (double a : {0.3, 1.2, 2.0, 2.8, -0.4, -1.4, -2.1, -2.9}) out.push_back(std::polar(rad, a));
  return out;
}

// ---------------------------------------------------------------- scatter

Summary do_scatter(Lab& lab) {
  const auto& cfg = lab.cfg;
  Summary s{"scatter", {}};
  guarded(s, "scatter configured potential", 4, [&] {
    const ScatteringData& d = lab.data();
    s.add(Check::at_most("unitarity defect", d.max_unitarity_defect(), cfg.unitarity_tol, 4));
    const ReflectionCoefficient& r = lab.r();
    s.checks.back().note = "sup|r| = " + fmt(r.rho);
    if (const auto p = lab.path("scattering.csv"); !p.empty()) write_scattering_csv(p, d, r);
  });

  guarded(s, "box oracle", 4, [&] {
    const auto zs = linspace(-5.0, 5.0, 41);
    double worst = 0.0, defect = 0.0;
    for (cplx a : {cplx(0.5), cplx(0.9), cplx(-0.4, 0.7)})
      for (double len : {1.0, 2.0, 4.0}) {
        const ScatteringData d = scatter_grid(sample_box_aligned(a, len, 0.01, 20), zs);
        defect = std::max(defect, d.max_unitarity_defect());
        for (std::size_t k = 0; k < zs.size(); ++k) {
          const ScatteringPair ref = box_oracle(a, len, zs[k]);
          worst = std::max({worst, std::abs(d.a[k] - ref.a), std::abs(d.b[k] - ref.b)});
        }
      }
    s.add(Check::at_most("box oracle max error", worst, cfg.oracle_tol, 4));
    s.add(Check::at_most("box unitarity defect", defect, cfg.unitarity_tol, 4));
  });

  guarded(s, "Born limit", 4, [&] {
    const auto zs = linspace(-2.0, 2.0, 41);
    const std::vector<double> eps{0.02, 0.01, 0.005};
    std::vector<double> errs;
    for (double e : eps) {
      const SampledField q = sample_potential(Potential::sech(e), 0.01);
      double worst = 0.0;
      for (double z : zs) {
        const ScatteringPair ab = jost_scatter(q, z);
        const cplx r = ab.b / ab.a;
        worst = std::max(worst, std::abs(r - born_oracle(q, z)) / std::abs(r));
      }
      errs.push_back(worst);
    }
    s.add(Check::at_most("Born relative error eps=0.01", errs[1], cfg.born_tol, 4));
    s.add(Check::at_least("Born convergence order", fit_decay(eps, errs, 3).exponent, 1.0, 4));
    if (const auto p = lab.path("born.csv"); !p.empty()) {
      CsvWriter w(p, {"eps", "max_rel_error"});
      for (std::size_t k = 0; k < eps.size(); ++k) {
        w << eps[k] << errs[k];
        w.end_row();
      }
    }
  });
  return s;
}

// ---------------------------------------------------------------- phase

Summary do_phase(Lab& lab) {
  const auto& cfg = lab.cfg;
  Summary s{"phase", {}};
  guarded(s, "delta suite", 5, [&] {
    const ReflectionCoefficient& r = lab.r();
    const double z0 = cfg.z0;
    const double rho = r.rho;
    const auto sample = complex_sample(z0);

    double refl = 0.0, excess = 0.0, gam = 0.0;
    std::vector<PhaseEvaluation> rows;
    for (cplx z : sample) {
      const PhaseEvaluation e = evaluate_phase(z, z0, r);
      rows.push_back(e);
      const double m = std::abs(e.delta_val);
      refl = std::max(refl, std::abs(e.delta_val * std::conj(delta(std::conj(z), z0, r)) - 1.0));
      excess = std::max({excess, m - std::pow(1.0 - rho, -0.5), std::pow(1.0 - rho, 0.5) - m,
                         z.imag() > 0 ? m - 1.0 : 1.0 - m});
      gam = std::max(gam, std::abs(gamma(z, z0, r, GammaMethod::direct) - gamma(z, z0, r, GammaMethod::decomposed)));
    }
    double right = 0.0, left = 0.0;
    for (double d : {1e-3, 0.1, 0.5, 2.0}) right = std::max(right, std::abs(std::abs(delta(z0 + d, z0, r)) - 1.0));
    for (double d : {1e-2, 0.3, 0.7, 2.0, 5.0}) {
      const double x = z0 - d;
      left = std::max(left, std::abs(std::abs(delta_boundary(x, z0, r).plus) - std::sqrt(1.0 - std::norm(r(x)))));
    }
    s.add(Check::at_most("delta reflection identity", refl, cfg.identity_tol, 5));
    s.add(Check::at_most("delta bound excess", std::max(excess, 0.0), cfg.identity_tol, 5));
    s.add(Check::at_most("|delta| - 1 right of z0", right, cfg.identity_tol, 5));
    s.add(Check::at_most("|delta_+| - sqrt(1-|r|^2) left of z0", left, cfg.identity_tol, 5));
    s.add(Check::at_most("gamma direct vs decomposed", gam, cfg.identity_tol, 5));
    if (const auto p = lab.path("delta.csv"); !p.empty()) write_delta_csv(p, rows);
  });
  return s;
}

// ---------------------------------------------------------------- model-check

Summary do_model_check(Lab& lab) {
  const auto& cfg = lab.cfg;
  Summary s{"model-check", {}};
  std::vector<double> radii;
  for (std::size_t k = 0; k < cfg.ray_points; ++k)
    radii.push_back(0.25 * std::pow(32.0, static_cast<double>(k) / static_cast<double>(cfg.ray_points - 1)));

  for (std::size_t i = 0; i < cfg.r0_list.size(); ++i) {
    const cplx r0 = cfg.r0_list[i];
    const std::string tag = " " + r0_label(r0);
    guarded(s, "model" + tag, 1, [&] {
      const ModelParams p = ModelParams::make(r0);
      std::vector<JumpSample> rows;
      double jump = 0.0, axis = 0.0, det = 0.0;
      for (int ray = 1; ray <= 4; ++ray)
        for (double rad : radii) {
          const double res = jump_residual(ray, rad, p);
          rows.push_back({ray, rad, res});
          jump = std::max(jump, res);
        }
      for (double rad : radii) axis = std::max({axis, real_axis_residual(rad, p), real_axis_residual(-rad, p)});
      for (cplx xi : off_contour_points()) det = std::max(det, std::abs(model_P(xi, p).det() - 1.0));
      s.add(Check::at_most("jump residual" + tag, jump, cfg.jump_tol, 1));
      s.add(Check::at_most("real-axis residual" + tag, axis, cfg.jump_tol, 1));
      s.add(Check::at_most("|det P - 1|" + tag, det, cfg.jump_tol, 1));

      const Matrix2C p1 = p1_infinity(p);
      s.add(Check::at_most("|P1_12 P1_21 - nu|" + tag, std::abs(p1.m12 * p1.m21 - p.nu), cfg.product_tol, 3));

      if (!p.degenerate()) {
        const std::vector<double> far{20.0, 40.0};
        std::vector<double> es;
        for (double rad : far) es.push_back(large_xi_residual(cplx(0.0, rad), p));
        s.add(Check::at_most("large-xi slope" + tag, fit_decay(far, es, 2).exponent, cfg.slope_max, 2));
      }
      if (const auto path = lab.path("jumps_" + std::to_string(i) + ".csv"); !path.empty()) write_jump_csv(path, rows);
    });
  }
  return s;
}

// ---------------------------------------------------------------- asymptote

Summary do_asymptote(Lab& lab) {
  const auto& cfg = lab.cfg;
  Summary s{"asymptote", {}};
  guarded(s, "asymptotic routes", 3, [&] {
    const ReflectionCoefficient& r = lab.r();
    std::vector<AsymptoticSample> rows;
    double agree = 0.0, modulus = 0.0;
    for (double z0 : cfg.asym_z0)
      for (double t : cfg.asym_t) {
        const auto f = AsymptoticFrame::make(-4.0 * t * z0, t);
        const LeadingTerm th = leading_q(f, r, Route::closed_form);
        const LeadingTerm md = leading_q(f, r, Route::model);
        for (const auto& [lt, route] : {std::pair{th, Route::closed_form}, std::pair{md, Route::model}})
          rows.push_back({f.x, t, f.z0, lt.nu, lt.q, route, lt.degenerate, lt.untrusted});
        if (th.degenerate) continue;
        agree = std::max(agree, std::abs(th.q - md.q) / std::abs(th.q));
        for (const LeadingTerm& lt : {th, md})
          modulus = std::max(modulus, std::abs(std::norm(lt.q) * t / (th.nu / 2.0) - 1.0));
      }
    s.add(Check::at_most("closed-form vs model route (relative)", agree, cfg.route_tol, 3));
    s.add(Check::at_most("|alpha|^2 vs nu/2 (relative)", modulus, cfg.route_tol, 3));
    if (const auto p = lab.path("asymptote.csv"); !p.empty()) write_asymptotic_csv(p, rows);
  });
  return s;
}

// ---------------------------------------------------------------- evolve / compare

EvolutionConfig evolution_config(const ExperimentConfig& cfg, double t_final) {
  // One window for evolve and compare: sized for the longest comparison time.
  EvolutionConfig ec = EvolutionConfig::sized_for(std::max(cfg.compare_t.back(), t_final), cfg.window_z_max, cfg.n, cfg.dt);
  ec.t_final = t_final;
  return ec;
}

Summary do_evolve(Lab& lab) {
  const auto& cfg = lab.cfg;
  Summary s{"evolve", {}};
  guarded(s, "evolution", 0, [&] {
    const EvolutionConfig ec = evolution_config(cfg, cfg.evolve_t);
    const SampledField q0 = SampledField::sample(ec.grid, [&](double x) { return cfg.potential(x); });
    const SampledField q = split_step_evolve(q0, ec);
    const double n0 = l2_norm(q0);
    const double mass = n0 * n0;
    s.add(Check::at_most("relative L2 norm drift", n0 > 0 ? std::abs(l2_norm(q) / n0 - 1.0) : l2_norm(q), cfg.norm_tol));
    s.add(Check::at_most("momentum drift / mass", mass > 0 ? std::abs(momentum(q) - momentum(q0)) / mass : 0.0,
                         cfg.momentum_tol));
    if (const auto p = lab.path("snapshot.csv"); !p.empty()) write_snapshot_csv(p, q);
  });
  return s;
}

Summary do_compare(Lab& lab) {
  const auto& cfg = lab.cfg;
  Summary s{"compare", {}};
  guarded(s, "PDE comparison", 8, [&] {
    const EvolutionConfig ec = evolution_config(cfg, cfg.compare_t.back());
    const SampledField q0 = SampledField::sample(ec.grid, [&](double x) { return cfg.potential(x); });
    const ComparisonReport rep = compare_asymptotic(q0, lab.r(), cfg.x_probe, cfg.compare_t, ec);
    if (const auto p = lab.path("comparison.csv"); !p.empty()) write_comparison_csv(p, rep);

    if (rep.degenerate) {
      double worst = 0.0;
      for (const auto& row : rep.rows) worst = std::max(worst, row.abs_error);
      s.add(Check::at_most("max |q_num - q_asym| (zero leading term)", worst, 0.0, 8));
      return;
    }
    double modulus = 0.0, lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t k = 0; k < rep.rows.size(); ++k) {
      const auto& row = rep.rows[k];
      if (row.t < cfg.phase_t_min) continue;
      modulus = std::max(modulus, std::abs(std::abs(row.q_num) * std::sqrt(row.t) / rep.modulus_target - 1.0));
      lo = std::min(lo, rep.phase_offset[k]);
      hi = std::max(hi, rep.phase_offset[k]);
    }
    Check m = Check::at_most("|q| sqrt(t) vs sqrt(nu/2) (relative)", modulus, cfg.modulus_tol, 8);
    m.note = "target " + fmt(rep.modulus_target);
    s.add(std::move(m));
    Check e = Check::within("residual decay exponent", rep.error_fit.exponent, -1.0, -0.5, 8);
    e.note = "r^2 = " + fmt(rep.error_fit.r_squared);
    s.add(std::move(e));
    s.add(Check::at_most("phase drift (rad)", hi >= lo ? hi - lo : kNaN, cfg.phase_tol, 8));
  });
  return s;
}

// ---------------------------------------------------------------- dbar

double variation(double a, double b) {
  if (a == 0.0 && b == 0.0) return 1.0;
  return std::max(a / b, b / a);
}

Summary do_dbar(Lab& lab) {
  const auto& cfg = lab.cfg;
  Summary s{"dbar", {}};
  guarded(s, "decay integrals", 6, [&] {
    const ReflectionCoefficient data = cfg.decay_data == "rough"
                                           ? rough_reflection(cfg.z0, cfg.rough_amplitude, cfg.rough_power)
                                           : lab.r();
    const DecaySweep sw = decay_sweep(cfg.decay_t, cfg.z0, data, default_probes(cfg.z0));
    const std::pair<const char*, const DecayFit*> fits[] = {{"I1", &sw.fit1}, {"I2", &sw.fit2}, {"I3", &sw.fit3},
                                                            {"I4", &sw.fit4}};
    for (const auto& [name, fit] : fits) {
      const bool slow = name[1] == '1' || name[1] == '2';
      s.add(Check::within(std::string(name) + " decay exponent", fit->exponent, slow ? -0.35 : -0.85,
                          slow ? -0.15 : -0.65, 6));
    }
    for (const auto& [name, fit] : fits) s.add(Check::at_least(std::string(name) + " fit r^2", fit->r_squared, 0.98, 6));
    if (const auto p = lab.path("decay.csv"); !p.empty()) write_decay_csv(p, sw);
  });

  guarded(s, "dbar bound", 7, [&] {
    const ExtensionModel m(cfg.z0, lab.r());
    const BoundConstants coarse = fit_dbar_bound(m, cfg.bound_radius_min, 1.0, cfg.bound_radii, cfg.bound_angles);
    const BoundConstants fine = fit_dbar_bound(m, cfg.bound_radius_min, 1.0, 4 * cfg.bound_radii, 4 * cfg.bound_angles);
    Check c1 = Check::at_most("c1 variation under 4x refinement", variation(coarse.c1, fine.c1), cfg.stability_factor, 7);
    c1.note = fmt(coarse.c1) + " -> " + fmt(fine.c1);
    Check c2 = Check::at_most("c2 variation under 4x refinement", variation(coarse.c2, fine.c2), cfg.stability_factor, 7);
    c2.note = fmt(coarse.c2) + " -> " + fmt(fine.c2);
    s.add(std::move(c1));
    s.add(std::move(c2));
    s.add(Check::at_most("|dbar R1| / bound, coarse grid", coarse.max_ratio, 1.0, 7));
    s.add(Check::at_most("|dbar R1| / bound, fine grid", fine.max_ratio, 1.0, 7));
    if (const auto p = lab.path("dbar_bound.csv"); !p.empty()) {
      CsvWriter w(p, {"n_radius", "n_angle", "c1", "c2", "max_ratio"});
      for (const auto& [nr, na, b] : {std::tuple{cfg.bound_radii, cfg.bound_angles, coarse},
                                      std::tuple{4 * cfg.bound_radii, 4 * cfg.bound_angles, fine}}) {
        w << static_cast<long>(nr) << static_cast<long>(na) << b.c1 << b.c2 << b.max_ratio;
        w.end_row();
      }
    }
  });
  return s;
}

Summary dispatch(Command c, Lab& lab) {
  switch (c) {
    case Command::scatter: return do_scatter(lab);
    case Command::phase: return do_phase(lab);
    case Command::model_check: return do_model_check(lab);
    case Command::asymptote: return do_asymptote(lab);
    case Command::evolve: return do_evolve(lab);
    case Command::compare: return do_compare(lab);
    case Command::dbar: return do_dbar(lab);
    case Command::all: {
      Summary s{"all", {}};
      for (Command sub : {Command::scatter, Command::phase, Command::model_check, Command::asymptote,
                          Command::evolve, Command::compare, Command::dbar})
        s.append(dispatch(sub, lab));
      return s;
    }
  }
  return {};
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  const auto it = command_table().find(name);
  if (it == command_table().end()) return std::nullopt;
  return it->second;
}

std::string command_name(Command c) {
  for (const auto& [name, cmd] : command_table())
    if (cmd == c) return name;
  return {};
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"scatter", "phase", "model-check", "asymptote",
                                              "evolve",  "compare", "dbar",       "all"};
  return names;
}

Summary run(Command c, const ExperimentConfig& cfg) {
  if (!cfg.out_dir.empty()) std::filesystem::create_directories(cfg.out_dir);
  Lab lab(cfg);
  Summary s = dispatch(c, lab);
  if (const auto p = lab.path("summary.json"); !p.empty()) {
    std::ofstream out(p);
    if (!out) throw nlsdbar::Error("cannot write " + p);
    out << summary_json(s);
  }
  return s;
}

}  // namespace nlslab
