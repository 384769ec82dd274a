#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbalg/linalg.hpp"

namespace rbalg {

inline constexpr std::size_t kDefaultViolationCap = 16;

struct Violation {
  std::string axiom;
  std::vector<std::size_t> basis;
  Vector lhs;
  Vector rhs;
};

struct SideCheck {
  std::string name;
  bool passed;
};

/// Outcome of an axiom check. `passed` iff no violation was recorded; side
/// checks are reported separately and do not affect `passed`.
struct CheckReport {
  explicit CheckReport(std::size_t cap = kDefaultViolationCap) : cap(cap < 1 ? 1 : cap) {}

  bool passed = true;
  std::vector<Violation> violations;
  std::size_t violation_count = 0;
  std::size_t cap;
  std::vector<SideCheck> side_checks;

  void add_violation(Violation v);
  void add_side_check(std::string name, bool ok);
  std::optional<bool> side_check(const std::string& name) const;
  bool all_side_checks_passed() const;
  /// Appends the other report's violations and side checks, prefixing names.
  void merge(const CheckReport& other, const std::string& prefix = "");
  std::string to_string() const;
};

}  // namespace rbalg
