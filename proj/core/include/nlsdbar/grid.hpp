#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "nlsdbar/types.hpp"

namespace nlsdbar {

/// Uniform grid x_k = x_min + k*dx, k = 0..n-1.
struct Grid1D {
  double x_min = 0.0;
  double dx = 1.0;
  std::size_t n = 2;

  double x(std::size_t k) const { return x_min + static_cast<double>(k) * dx; }
  double x_max() const { return x(n - 1); }

  /// Throws DomainError unless dx > 0 and n >= 2.
  void validate() const;

  /// n points on the periodic window [-half_width, half_width): x_min = -L, dx = 2L/n.
  static Grid1D periodic(double half_width, std::size_t n);
};

/// Complex samples of a function on a Grid1D.
struct SampledField {
  Grid1D grid;
  std::vector<cplx> values;

  SampledField() = default;
  SampledField(Grid1D g, std::vector<cplx> v);

  /// Length check plus grid validation.
  void validate() const;

  /// True when both end samples are below tol in modulus.
  bool boundary_decayed(double tol) const;

  static SampledField sample(const Grid1D& g, const std::function<cplx(double)>& f);
};

enum class PotentialType { sech, box, gaussian, file, zero };

/// Analytic initial data q0(x) as described by an experiment config.
///   sech:     A * sech(x / w)
///   box:      A on [-w/2, w/2], zero elsewhere
///   gaussian: A * exp(-x^2 / w^2)
///   file:     samples read from a two- or three-column text file (x, Re q [, Im q])
struct Potential {
  PotentialType type = PotentialType::sech;
  cplx amplitude{0.5};
  double width = 1.0;
  std::string path;
  std::vector<double> table_x;  // file potentials only
  std::vector<cplx> table_q;

  /// Point evaluation. File potentials are linearly interpolated and zero
  /// outside the tabulated range.
  cplx operator()(double x) const;

  /// Half-width beyond which |q0| < tol.
  double support_half_width(double tol) const;

  static Potential sech(cplx amplitude, double width = 1.0);
  static Potential box(cplx amplitude, double length);
  static Potential gaussian(cplx amplitude, double width);
  /// Throws Error when the file cannot be read or has fewer than two rows.
  static Potential from_file(const std::string& path);

  static PotentialType parse_type(const std::string& name);
};

/// Grid for a box potential whose edges fall exactly on cell boundaries, so
/// the piecewise-constant cell model reproduces the box without error.
/// Cells of width dx tile [-L/2, L/2]; `margin` extra cells are added on each side.
SampledField sample_box_aligned(cplx amplitude, double length, double dx, std::size_t margin);

}  // namespace nlsdbar
