#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "nlsdbar/asymptotics.hpp"
#include "nlsdbar/dbar.hpp"
#include "nlsdbar/pde.hpp"
#include "nlsdbar/phase.hpp"
#include "nlsdbar/scattering.hpp"

namespace nlsdbar {

/// Minimal CSV writer. Reals are printed with %.17g so output is exact and
/// byte-identical across runs.
class CsvWriter {
 public:
  /// Throws Error if the file cannot be opened.
  CsvWriter(const std::string& path, const std::vector<std::string>& header);
  ~CsvWriter();
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  CsvWriter& operator<<(double v);
  CsvWriter& operator<<(const std::string& v);
  CsvWriter& operator<<(long v);
  void end_row();

 private:
  void sep();
  std::FILE* f_;
  bool first_ = true;
};

struct JumpSample {
  int ray;
  double radius;
  double residual;
};

/// z, Re a, Im a, Re b, Im b, Re r, Im r, Re r', Im r'
void write_scattering_csv(const std::string& path, const ScatteringData& data,
                          const ReflectionCoefficient& r);
/// Re z, Im z, Re delta, Im delta, |delta|
void write_delta_csv(const std::string& path, const std::vector<PhaseEvaluation>& rows);
/// ray, |xi|, residual
void write_jump_csv(const std::string& path, const std::vector<JumpSample>& rows);
/// x, t, z0, nu, Re q_asym, Im q_asym, route
void write_asymptotic_csv(const std::string& path, const std::vector<AsymptoticSample>& rows);
/// t, I1, I2, I3, I4, then a row "exponent" with the fitted slopes
void write_decay_csv(const std::string& path, const DecaySweep& sweep);
/// t, Re q_num, Im q_num, Re q_asym, Im q_asym, abs_error
void write_comparison_csv(const std::string& path, const ComparisonReport& rep);
/// x, |q|
void write_snapshot_csv(const std::string& path, const SampledField& q);

}  // namespace nlsdbar
