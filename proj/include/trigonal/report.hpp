#pragma once

#include <string>
#include <vector>

namespace trigonal {

struct Check {
  std::string id;
  bool passed = false;
  std::string detail;
};

/// An ordered list of named pass/fail checks.
struct CheckReport {
  std::vector<Check> checks;

  void add(std::string id, bool passed, std::string detail = {}) {
    checks.push_back({std::move(id), passed, std::move(detail)});
  }
  void append(const CheckReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (!c.passed) out.push_back(c.id + (c.detail.empty() ? "" : ": " + c.detail));
    return out;
  }
};

}  // namespace trigonal
