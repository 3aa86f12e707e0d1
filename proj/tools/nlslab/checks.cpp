#include "checks.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace nlslab {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

bool Check::pass() const {
  if (!std::isfinite(measured)) return false;
  switch (relation) {
    case Relation::at_most: return measured <= hi;
    case Relation::at_least: return measured >= lo;
    case Relation::within: return measured >= lo && measured <= hi;
  }
  return false;
}

std::string Check::threshold() const {
  switch (relation) {
    case Relation::at_most: return "<= " + fmt(hi);
    case Relation::at_least: return ">= " + fmt(lo);
    case Relation::within: return "in [" + fmt(lo) + ", " + fmt(hi) + "]";
  }
  return {};
}

Check Check::at_most(std::string name, double measured, double limit, int criterion) {
  return {std::move(name), measured, Relation::at_most, 0.0, limit, criterion, {}};
}

Check Check::at_least(std::string name, double measured, double limit, int criterion) {
  return {std::move(name), measured, Relation::at_least, limit, 0.0, criterion, {}};
}

Check Check::within(std::string name, double measured, double lo, double hi, int criterion) {
  return {std::move(name), measured, Relation::within, lo, hi, criterion, {}};
}

void Summary::append(const Summary& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool Summary::pass() const {
  for (const auto& c : checks)
    if (!c.pass()) return false;
  return true;
}

bool Summary::criterion_pass(int criterion) const {
  bool any = false;
  for (const auto& c : checks) {
    if (c.criterion != criterion) continue;
    any = true;
    if (!c.pass()) return false;
  }
  return any;
}

std::string format_line(const Check& c) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-40s %14.6g  %-22s %s", c.name.c_str(), c.measured, c.threshold().c_str(),
                c.pass() ? "PASS" : "FAIL");
  std::string line = buf;
  if (!c.note.empty()) line += "  (" + c.note + ")";
  return line;
}

std::string format_summary(const Summary& s) {
  std::string out;
  for (const auto& c : s.checks) out += format_line(c) + "\n";
  out += s.command + ": " + (s.pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

std::string summary_json(const Summary& s) {
  nlohmann::ordered_json j;
  j["command"] = s.command;
  j["pass"] = s.pass();
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : s.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["measured"] = std::isfinite(c.measured) ? nlohmann::ordered_json(c.measured) : nlohmann::ordered_json(nullptr);
    e["threshold"] = c.threshold();
    e["pass"] = c.pass();
    if (c.criterion) e["criterion"] = c.criterion;
    if (!c.note.empty()) e["note"] = c.note;
    arr.push_back(e);
  }
  return j.dump(2) + "\n";
}

}  // namespace nlslab
