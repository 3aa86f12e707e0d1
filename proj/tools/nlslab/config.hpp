#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlsdbar/grid.hpp"
#include "nlsdbar/types.hpp"

namespace nlslab {

/// All problems found in a config file, one "source:line: message" per entry.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> diagnostics);
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

/// Flat key = value experiment description. Every key is optional; see
/// README.md for the list. Lists are comma separated.
struct ExperimentConfig {
  // initial data
  nlsdbar::Potential potential = nlsdbar::Potential::sech(0.8);
  double dx = 0.005;            // sampling step for scattering

  // spectral grid
  double z_min = -8.0;
  double z_max = 8.0;
  std::size_t z_points = 1601;

  // model-check: entries "m" or "m@arg" (arg in radians)
  std::vector<nlsdbar::cplx> r0_list{0.25, std::polar(0.5, nlsdbar::pi / 3), 0.9};
  std::size_t ray_points = 40;

  // phase, dbar
  double z0 = 0.0;

  // asymptote: 5 x 5 grid of (z0, t)
  std::vector<double> asym_z0{-1.0, -0.5, 0.0, 0.3, 0.8};
  std::vector<double> asym_t{5.0, 20.0, 50.0, 200.0, 1000.0};

  // evolve / compare
  double x_probe = 0.0;
  std::vector<double> compare_t{20.0, 28.284271247461902, 40.0, 56.568542494923804, 80.0,
                                113.13708498984761, 160.0};
  double phase_t_min = 40.0;    // phase drift and modulus checked for t >= this
  double evolve_t = 10.0;
  double dt = 0.005;
  std::size_t n = 32768;
  double window_z_max = 4.5;    // half-width = max(20, 4 window_z_max t_final)

  // dbar
  std::vector<double> decay_t{1e2, 316.22776601683796, 1e3, 3162.2776601683795, 1e4,
                              31622.776601683792, 1e5};
  std::string decay_data = "rough";  // rough | potential
  double rough_amplitude = 0.5;
  double rough_power = 0.55;
  std::size_t bound_radii = 32;
  std::size_t bound_angles = 16;
  double bound_radius_min = 1e-3;

  // tolerances
  double unitarity_tol = 1e-8;
  double oracle_tol = 1e-8;
  double born_tol = 0.02;
  double jump_tol = 1e-6;
  double identity_tol = 1e-6;
  double product_tol = 1e-10;
  double route_tol = 1e-8;
  double norm_tol = 1e-10;
  double momentum_tol = 1e-6;
  double modulus_tol = 0.1;
  double phase_tol = 0.05;
  double slope_max = -0.9;
  double stability_factor = 2.0;

  std::string out_dir = "nlslab-out";

  std::vector<double> z_grid() const;
};

/// Parses `key = value` lines. '#' starts a comment. Unknown keys, repeated
/// keys, malformed values and failed invariants are all collected and thrown
/// together as ConfigError.
ExperimentConfig parse_config(std::istream& in, const std::string& source = "<config>");
ExperimentConfig load_config(const std::string& path);

/// Names of all accepted keys, in documentation order.
const std::vector<std::string>& config_keys();

}  // namespace nlslab
