#include "nlsdbar/grid.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "nlsdbar/error.hpp"

namespace nlsdbar {

void Grid1D::validate() const {
  if (!(dx > 0.0) || !std::isfinite(dx)) throw DomainError("Grid1D: dx must be positive and finite");
  if (n < 2) throw DomainError("Grid1D: need at least two points");
  if (!std::isfinite(x_min)) throw DomainError("Grid1D: x_min must be finite");
}

Grid1D Grid1D::periodic(double half_width, std::size_t n) {
  Grid1D g{-half_width, 2.0 * half_width / static_cast<double>(n), n};
  g.validate();
  return g;
}

SampledField::SampledField(Grid1D g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
  validate();
}

void SampledField::validate() const {
  grid.validate();
  if (values.size() != grid.n) throw DomainError("SampledField: values.size() != grid.n");
}

bool SampledField::boundary_decayed(double tol) const {
  return std::abs(values.front()) < tol && std::abs(values.back()) < tol;
}

SampledField SampledField::sample(const Grid1D& g, const std::function<cplx(double)>& f) {
  g.validate();
  std::vector<cplx> v(g.n);
  for (std::size_t k = 0; k < g.n; ++k) v[k] = f(g.x(k));
  return {g, std::move(v)};
}

cplx Potential::operator()(double x) const {
  switch (type) {
    case PotentialType::zero:
      return 0.0;
    case PotentialType::sech:
      return amplitude / std::cosh(x / width);
    case PotentialType::box:
      return std::abs(x) <= 0.5 * width ? amplitude : cplx{0.0};
    case PotentialType::gaussian:
      return amplitude * std::exp(-(x * x) / (width * width));
    case PotentialType::file: {
      if (table_x.empty() || x < table_x.front() || x > table_x.back()) return 0.0;
      auto it = std::upper_bound(table_x.begin(), table_x.end(), x);
      if (it == table_x.end()) return table_q.back();
      const auto j = static_cast<std::size_t>(it - table_x.begin());
      const double t = (x - table_x[j - 1]) / (table_x[j] - table_x[j - 1]);
      return (1.0 - t) * table_q[j - 1] + t * table_q[j];
    }
  }
  return 0.0;
}

double Potential::support_half_width(double tol) const {
  const double a = std::abs(amplitude);
  if (type == PotentialType::zero || a == 0.0) return 1.0;
  switch (type) {
    case PotentialType::sech:
      // A sech(x/w) < tol  <=>  x > w acosh(A/tol), with sech(y) <= 2 e^{-y}.
      return width * std::log(2.0 * a / tol) + 1.0;
    case PotentialType::box:
      return 0.5 * width + 1.0;
    case PotentialType::gaussian:
      return width * std::sqrt(std::max(std::log(a / tol), 0.0)) + 1.0;
    case PotentialType::file:
      return std::max(std::abs(table_x.front()), std::abs(table_x.back())) + 1.0;
    default:
      return 1.0;
  }
}

Potential Potential::sech(cplx amplitude, double width) {
  Potential p;
  p.type = PotentialType::sech;
  p.amplitude = amplitude;
  p.width = width;
  return p;
}

Potential Potential::box(cplx amplitude, double length) {
  Potential p;
  p.type = PotentialType::box;
  p.amplitude = amplitude;
  p.width = length;
  return p;
}

Potential Potential::gaussian(cplx amplitude, double width) {
  Potential p;
  p.type = PotentialType::gaussian;
  p.amplitude = amplitude;
  p.width = width;
  return p;
}

Potential Potential::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open potential file '" + path + "'");
  Potential p;
  p.type = PotentialType::file;
  p.path = path;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double x = 0.0, re = 0.0, im = 0.0;
    if (!(ls >> x >> re)) continue;  // header rows
    ls >> im;
    if (!p.table_x.empty() && !(x > p.table_x.back()))
      throw Error("potential file '" + path + "': x column must be strictly increasing");
    p.table_x.push_back(x);
    p.table_q.emplace_back(re, im);
  }
  if (p.table_x.size() < 2) throw Error("potential file '" + path + "': need at least two rows");
  return p;
}

PotentialType Potential::parse_type(const std::string& name) {
  if (name == "sech") return PotentialType::sech;
  if (name == "box") return PotentialType::box;
  if (name == "gaussian") return PotentialType::gaussian;
  if (name == "file") return PotentialType::file;
  if (name == "zero") return PotentialType::zero;
  throw DomainError("unknown potential type '" + name + "'");
}

SampledField sample_box_aligned(cplx amplitude, double length, double dx, std::size_t margin) {
  if (!(length > 0.0)) throw DomainError("sample_box_aligned: length must be positive");
  const auto inside = static_cast<std::size_t>(std::llround(length / dx));
  if (inside == 0 || std::abs(static_cast<double>(inside) * dx - length) > 1e-12 * length)
    throw DomainError("sample_box_aligned: length must be an integer multiple of dx");
  Grid1D g{-0.5 * length + 0.5 * dx - static_cast<double>(margin) * dx, dx, inside + 2 * margin};
  std::vector<cplx> v(g.n, cplx{0.0});
  for (std::size_t k = margin; k < margin + inside; ++k) v[k] = amplitude;
  return {g, std::move(v)};
}

}  // namespace nlsdbar
