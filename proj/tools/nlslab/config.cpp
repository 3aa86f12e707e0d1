#include "config.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "nlsdbar/error.hpp"
#include "nlsdbar/reflection.hpp"

namespace nlslab {

using nlsdbar::cplx;

namespace {

std::string join_lines(const std::vector<std::string>& d) {
  std::string out = "invalid config";
  for (const auto& s : d) out += "\n  " + s;
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

double to_double(const std::string& s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (s.empty() || res.ec != std::errc() || res.ptr != end) throw std::invalid_argument("not a number: '" + s + "'");
  if (!std::isfinite(v)) throw std::invalid_argument("not finite: '" + s + "'");
  return v;
}

std::size_t to_size(const std::string& s) {
  std::size_t v = 0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (s.empty() || res.ec != std::errc() || res.ptr != end)
    throw std::invalid_argument("not a non-negative integer: '" + s + "'");
  return v;
}

std::vector<double> to_doubles(const std::string& s) {
  std::vector<double> out;
  for (const auto& item : split_list(s)) out.push_back(to_double(item));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

// "m" or "m@arg"
cplx to_polar(const std::string& s) {
  const auto at = s.find('@');
  if (at == std::string::npos) return to_double(s);
  return std::polar(to_double(trim(s.substr(0, at))), to_double(trim(s.substr(at + 1))));
}

struct PotentialSpec {
  std::string type = "sech";
  double amplitude = 0.8;
  double amplitude_im = 0.0;
  double width = 1.0;
  std::string file;
};

using Setter = std::function<void(ExperimentConfig&, PotentialSpec&, const std::string&)>;

template <class T>
Setter num(T ExperimentConfig::*field) {
  return [field](ExperimentConfig& c, PotentialSpec&, const std::string& v) {
    if constexpr (std::is_same_v<T, std::size_t>)
      c.*field = to_size(v);
    else
      c.*field = to_double(v);
  };
}

Setter list(std::vector<double> ExperimentConfig::*field) {
  return [field](ExperimentConfig& c, PotentialSpec&, const std::string& v) { c.*field = to_doubles(v); };
}

const std::vector<std::pair<std::string, Setter>>& setters() {
  static const std::vector<std::pair<std::string, Setter>> table = {
      {"potential", [](auto&, PotentialSpec& p, const std::string& v) {
         nlsdbar::Potential::parse_type(v);
         p.type = v;
       }},
      {"amplitude", [](auto&, PotentialSpec& p, const std::string& v) { p.amplitude = to_double(v); }},
      {"amplitude_im", [](auto&, PotentialSpec& p, const std::string& v) { p.amplitude_im = to_double(v); }},
      {"width", [](auto&, PotentialSpec& p, const std::string& v) { p.width = to_double(v); }},
      {"potential_file", [](auto&, PotentialSpec& p, const std::string& v) { p.file = v; }},
      {"dx", num(&ExperimentConfig::dx)},
      {"z_min", num(&ExperimentConfig::z_min)},
      {"z_max", num(&ExperimentConfig::z_max)},
      {"z_points", num(&ExperimentConfig::z_points)},
      {"r0", [](ExperimentConfig& c, auto&, const std::string& v) {
         c.r0_list.clear();
         for (const auto& item : split_list(v)) c.r0_list.push_back(to_polar(item));
       }},
      {"ray_points", num(&ExperimentConfig::ray_points)},
      {"z0", num(&ExperimentConfig::z0)},
      {"asym_z0", list(&ExperimentConfig::asym_z0)},
      {"asym_t", list(&ExperimentConfig::asym_t)},
      {"x_probe", num(&ExperimentConfig::x_probe)},
      {"compare_t", list(&ExperimentConfig::compare_t)},
      {"phase_t_min", num(&ExperimentConfig::phase_t_min)},
      {"evolve_t", num(&ExperimentConfig::evolve_t)},
      {"dt", num(&ExperimentConfig::dt)},
      {"n", num(&ExperimentConfig::n)},
      {"window_z_max", num(&ExperimentConfig::window_z_max)},
      {"decay_t", list(&ExperimentConfig::decay_t)},
      {"decay_data", [](ExperimentConfig& c, auto&, const std::string& v) {
         if (v != "rough" && v != "potential") throw std::invalid_argument("expected rough or potential");
         c.decay_data = v;
       }},
      {"rough_amplitude", num(&ExperimentConfig::rough_amplitude)},
      {"rough_power", num(&ExperimentConfig::rough_power)},
      {"bound_radii", num(&ExperimentConfig::bound_radii)},
      {"bound_angles", num(&ExperimentConfig::bound_angles)},
      {"bound_radius_min", num(&ExperimentConfig::bound_radius_min)},
      {"unitarity_tol", num(&ExperimentConfig::unitarity_tol)},
      {"oracle_tol", num(&ExperimentConfig::oracle_tol)},
      {"born_tol", num(&ExperimentConfig::born_tol)},
      {"jump_tol", num(&ExperimentConfig::jump_tol)},
      {"identity_tol", num(&ExperimentConfig::identity_tol)},
      {"product_tol", num(&ExperimentConfig::product_tol)},
      {"route_tol", num(&ExperimentConfig::route_tol)},
      {"norm_tol", num(&ExperimentConfig::norm_tol)},
      {"momentum_tol", num(&ExperimentConfig::momentum_tol)},
      {"modulus_tol", num(&ExperimentConfig::modulus_tol)},
      {"phase_tol", num(&ExperimentConfig::phase_tol)},
      {"slope_max", num(&ExperimentConfig::slope_max)},
      {"stability_factor", num(&ExperimentConfig::stability_factor)},
      {"out_dir", [](ExperimentConfig& c, auto&, const std::string& v) { c.out_dir = v; }},
  };
  return table;
}

// Invariants that involve more than one key. Returns messages without location.
std::vector<std::string> validate(const ExperimentConfig& c) {
  std::vector<std::string> bad;
  auto positive = [&](const char* name, double v) {
    if (!(v > 0.0)) bad.push_back(std::string(name) + " must be > 0");
  };
  positive("dx", c.dx);
  positive("dt", c.dt);
  positive("evolve_t", c.evolve_t);
  positive("window_z_max", c.window_z_max);
  positive("rough_amplitude", c.rough_amplitude);
  positive("bound_radius_min", c.bound_radius_min);
  for (auto [name, v] : {std::pair<const char*, double>{"unitarity_tol", c.unitarity_tol},
                         {"oracle_tol", c.oracle_tol},
                         {"born_tol", c.born_tol},
                         {"jump_tol", c.jump_tol},
                         {"identity_tol", c.identity_tol},
                         {"product_tol", c.product_tol},
                         {"route_tol", c.route_tol},
                         {"norm_tol", c.norm_tol},
                         {"momentum_tol", c.momentum_tol},
                         {"modulus_tol", c.modulus_tol},
                         {"phase_tol", c.phase_tol},
                         {"stability_factor", c.stability_factor}})
    positive(name, v);
  if (!(c.z_max > c.z_min)) bad.push_back("z_max must exceed z_min");
  if (c.z_points < 3) bad.push_back("z_points must be >= 3");
  if (c.ray_points < 2) bad.push_back("ray_points must be >= 2");
  if (c.n < 16 || (c.n & (c.n - 1)) != 0) bad.push_back("n must be a power of two >= 16");
  if (c.bound_radii < 2 || c.bound_angles < 1) bad.push_back("bound grid needs >= 2 radii and >= 1 angle");
  if (!(c.rough_power > 0.0 && c.rough_power < 1.0)) bad.push_back("rough_power must lie in (0, 1)");
  for (cplx r0 : c.r0_list)
    if (!(std::abs(r0) < 1.0)) bad.push_back("r0 entries need |r0| < 1");
  auto increasing_positive = [&](const char* name, const std::vector<double>& ts, std::size_t min_size) {
    if (ts.size() < min_size) bad.push_back(std::string(name) + " needs at least " + std::to_string(min_size) + " values");
    for (std::size_t k = 0; k < ts.size(); ++k)
      if (!(ts[k] > 0.0) || (k > 0 && !(ts[k] > ts[k - 1]))) {
        bad.push_back(std::string(name) + " must be positive and increasing");
        break;
      }
  };
  increasing_positive("compare_t", c.compare_t, 5);
  increasing_positive("decay_t", c.decay_t, 5);
  increasing_positive("asym_t", c.asym_t, 1);
  if (c.asym_z0.empty()) bad.push_back("asym_z0 is empty");
  return bad;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> diagnostics)
    : std::runtime_error(join_lines(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::vector<double> ExperimentConfig::z_grid() const { return nlsdbar::linspace(z_min, z_max, z_points); }

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [name, _] : setters()) k.push_back(name);
    return k;
  }();
  return keys;
}

ExperimentConfig parse_config(std::istream& in, const std::string& source) {
  std::map<std::string, Setter> table(setters().begin(), setters().end());
  std::map<std::string, int> seen;
  std::vector<std::string> diag;
  ExperimentConfig cfg;
  PotentialSpec pot;
  int potential_line = 0;

  auto where = [&](int line) { return source + ":" + std::to_string(line) + ": "; };

  std::string raw;
  for (int line = 1; std::getline(in, raw); ++line) {
    const std::string text = trim(raw.substr(0, raw.find('#')));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      diag.push_back(where(line) + "expected 'key = value'");
      continue;
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    const auto it = table.find(key);
    if (it == table.end()) {
      diag.push_back(where(line) + "unknown key '" + key + "'");
      continue;
    }
    if (auto [prev, fresh] = seen.emplace(key, line); !fresh) {
      diag.push_back(where(line) + "'" + key + "' already set on line " + std::to_string(prev->second));
      continue;
    }
    if (key == "potential" || key == "potential_file") potential_line = line;
    try {
      it->second(cfg, pot, value);
    } catch (const std::exception& e) {
      diag.push_back(where(line) + key + ": " + e.what());
    }
  }

  try {
    if (!(pot.width > 0.0)) throw std::invalid_argument("width must be > 0");
    const cplx amp(pot.amplitude, pot.amplitude_im);
    if (pot.type == "sech") {
      cfg.potential = nlsdbar::Potential::sech(amp, pot.width);
    } else if (pot.type == "box") {
      cfg.potential = nlsdbar::Potential::box(amp, pot.width);
    } else if (pot.type == "gaussian") {
      cfg.potential = nlsdbar::Potential::gaussian(amp, pot.width);
    } else if (pot.type == "zero") {
      cfg.potential = nlsdbar::Potential::sech(0.0, pot.width);
      cfg.potential.type = nlsdbar::PotentialType::zero;
    } else if (pot.type == "file") {
      if (pot.file.empty()) throw std::invalid_argument("potential = file needs potential_file");
      if (!std::filesystem::exists(pot.file)) throw std::invalid_argument("no such file: " + pot.file);
      cfg.potential = nlsdbar::Potential::from_file(pot.file);
    }
  } catch (const std::exception& e) {
    diag.push_back(where(potential_line) + "potential: " + e.what());
  }

  for (const auto& msg : validate(cfg)) diag.push_back(source + ": " + msg);
  if (!diag.empty()) throw ConfigError(std::move(diag));
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({path + ": cannot open"});
  return parse_config(in, path);
}

}  // namespace nlslab
