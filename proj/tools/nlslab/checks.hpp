#pragma once

#include <string>
#include <vector>

namespace nlslab {

enum class Relation { at_most, at_least, within };

/// One verified property. `within` passes for lo <= measured <= hi.
struct Check {
  std::string name;
  double measured = 0.0;
  Relation relation = Relation::at_most;
  double lo = 0.0;
  double hi = 0.0;
  int criterion = 0;  // acceptance criterion number, 0 if none
  std::string note;

  bool pass() const;
  std::string threshold() const;

  static Check at_most(std::string name, double measured, double limit, int criterion = 0);
  static Check at_least(std::string name, double measured, double limit, int criterion = 0);
  static Check within(std::string name, double measured, double lo, double hi, int criterion = 0);
};

struct Summary {
  std::string command;
  std::vector<Check> checks;

  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const Summary& other);
  bool pass() const;
  /// Every check passing for the given criterion; false if there are none.
  bool criterion_pass(int criterion) const;
};

/// "name  measured  relation threshold  PASS|FAIL", one line per check.
std::string format_line(const Check& c);
std::string format_summary(const Summary& s);
/// JSON document with command, pass and a checks array.
std::string summary_json(const Summary& s);

}  // namespace nlslab
