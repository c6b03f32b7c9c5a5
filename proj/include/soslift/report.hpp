#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace soslift {

/// One verified claim at one degree (m = 0 when the check is not per-degree).
struct CheckResult {
  std::string name;
  int m = 0;
  bool passed = false;
  std::string detail;
};

/// Ordered list of check outcomes. Failures are entries, never exceptions.
struct Report {
  std::vector<CheckResult> checks;

  void add(std::string name, int m, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), m, passed, std::move(detail)});
  }

  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }

  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
  }
};

}  // namespace soslift
