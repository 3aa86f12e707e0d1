#include "nlsdbar/csv.hpp"

#include "nlsdbar/error.hpp"

namespace nlsdbar {

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : f_(std::fopen(path.c_str(), "w")) {
  if (!f_) throw Error("cannot open " + path + " for writing");
  for (const auto& h : header) *this << h;
  end_row();
}

CsvWriter::~CsvWriter() {
  if (f_) std::fclose(f_);
}

void CsvWriter::sep() {
  if (!first_) std::fputc(',', f_);
  first_ = false;
}

CsvWriter& CsvWriter::operator<<(double v) {
  sep();
  std::fprintf(f_, "%.17g", v);
  return *this;
}

CsvWriter& CsvWriter::operator<<(const std::string& v) {
  sep();
  std::fputs(v.c_str(), f_);
  return *this;
}

CsvWriter& CsvWriter::operator<<(long v) {
  sep();
  std::fprintf(f_, "%ld", v);
  return *this;
}

void CsvWriter::end_row() {
  std::fputc('\n', f_);
  first_ = true;
}

void write_scattering_csv(const std::string& path, const ScatteringData& data,
                          const ReflectionCoefficient& r) {
  if (data.z_grid.size() != r.z_grid.size()) throw DomainError("write_scattering_csv: size mismatch");
  CsvWriter w(path, {"z", "re_a", "im_a", "re_b", "im_b", "re_r", "im_r", "re_dr", "im_dr"});
  for (std::size_t k = 0; k < r.z_grid.size(); ++k) {
    w << r.z_grid[k] << data.a[k].real() << data.a[k].imag() << data.b[k].real() << data.b[k].imag()
      << r.r[k].real() << r.r[k].imag() << r.r_prime[k].real() << r.r_prime[k].imag();
    w.end_row();
  }
}

void write_delta_csv(const std::string& path, const std::vector<PhaseEvaluation>& rows) {
  CsvWriter w(path, {"re_z", "im_z", "re_delta", "im_delta", "abs_delta"});
  for (const auto& e : rows) {
    w << e.z.real() << e.z.imag() << e.delta_val.real() << e.delta_val.imag() << std::abs(e.delta_val);
    w.end_row();
  }
}

void write_jump_csv(const std::string& path, const std::vector<JumpSample>& rows) {
  CsvWriter w(path, {"ray", "abs_xi", "residual"});
  for (const auto& s : rows) {
    w << static_cast<long>(s.ray) << s.radius << s.residual;
    w.end_row();
  }
}

void write_asymptotic_csv(const std::string& path, const std::vector<AsymptoticSample>& rows) {
  CsvWriter w(path, {"x", "t", "z0", "nu", "re_q_asym", "im_q_asym", "route"});
  for (const auto& s : rows) {
    w << s.x << s.t << s.z0 << s.nu << s.q.real() << s.q.imag()
      << std::string(s.route == Route::closed_form ? "closed_form" : "model");
    w.end_row();
  }
}

void write_decay_csv(const std::string& path, const DecaySweep& sweep) {
  CsvWriter w(path, {"t", "I1", "I2", "I3", "I4"});
  for (std::size_t k = 0; k < sweep.ts.size(); ++k) {
    w << sweep.ts[k] << sweep.I1[k] << sweep.I2[k] << sweep.I3[k] << sweep.I4[k];
    w.end_row();
  }
  w << std::string("exponent") << sweep.fit1.exponent << sweep.fit2.exponent << sweep.fit3.exponent
    << sweep.fit4.exponent;
  w.end_row();
}

void write_comparison_csv(const std::string& path, const ComparisonReport& rep) {
  CsvWriter w(path, {"t", "re_q_num", "im_q_num", "re_q_asym", "im_q_asym", "abs_error"});
  for (const auto& row : rep.rows) {
    w << row.t << row.q_num.real() << row.q_num.imag() << row.q_asym.real() << row.q_asym.imag()
      << row.abs_error;
    w.end_row();
  }
}

void write_snapshot_csv(const std::string& path, const SampledField& q) {
  CsvWriter w(path, {"x", "abs_q"});
  for (std::size_t k = 0; k < q.values.size(); ++k) {
    w << q.grid.x(k) << std::abs(q.values[k]);
    w.end_row();
  }
}

}  // namespace nlsdbar
