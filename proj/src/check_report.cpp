#include "rbalg/check_report.hpp"

#include <algorithm>

namespace rbalg {

void CheckReport::add_violation(Violation v) {
  passed = false;
  ++violation_count;
  if (violations.size() < cap) violations.push_back(std::move(v));
}

void CheckReport::add_side_check(std::string name, bool ok) { side_checks.push_back({std::move(name), ok}); }

std::optional<bool> CheckReport::side_check(const std::string& name) const {
  for (const auto& s : side_checks) {
    if (s.name == name) return s.passed;
  }
  return std::nullopt;
}

bool CheckReport::all_side_checks_passed() const {
  return std::all_of(side_checks.begin(), side_checks.end(), [](const SideCheck& s) { return s.passed; });
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const auto& v : other.violations) {
    Violation w = v;
    w.axiom = prefix + w.axiom;
    if (violations.size() < cap) violations.push_back(std::move(w));
  }
  violation_count += other.violation_count;
  if (!other.passed) passed = false;
  for (const auto& s : other.side_checks) side_checks.push_back({prefix + s.name, s.passed});
}

std::string CheckReport::to_string() const {
  std::string s = passed ? "PASSED" : "FAILED (" + std::to_string(violation_count) + " violations)";
  s += "\n";
  for (const auto& v : violations) {
    s += "  violation: " + v.axiom + " at (";
    for (std::size_t i = 0; i < v.basis.size(); ++i) s += (i ? "," : "") + std::to_string(v.basis[i]);
    s += "): lhs = " + v.lhs.to_string() + ", rhs = " + v.rhs.to_string() + "\n";
  }
  if (violation_count > violations.size()) {
    s += "  ... " + std::to_string(violation_count - violations.size()) + " more\n";
  }
  for (const auto& c : side_checks) s += "  side check: " + c.name + ": " + (c.passed ? "yes" : "no") + "\n";
  return s;
}

}  // namespace rbalg
