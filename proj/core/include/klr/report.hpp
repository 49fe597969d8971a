#pragma once

#include <string>
#include <vector>

namespace klr {

/// Outcome of an exhaustive or randomized verification. Failures are kept
/// verbatim (up to a cap) so a report doubles as a witness list.
struct Report {
  std::string name;
  std::string window;  // the finite window the claim was checked on
  bool passed = true;
  long checks = 0;
  long failure_count = 0;
  std::vector<std::string> failures;

  static constexpr std::size_t kMaxStoredFailures = 8;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) fail(what);
  }
  void fail(const std::string& what) {
    passed = false;
    ++failure_count;
    if (failures.size() < kMaxStoredFailures) failures.push_back(what);
  }
  void absorb(const Report& other) {
    checks += other.checks;
    failure_count += other.failure_count;
    if (!other.passed) passed = false;
    for (const auto& f : other.failures)
      if (failures.size() < kMaxStoredFailures) failures.push_back(other.name.empty() ? f : other.name + ": " + f);
  }
  [[nodiscard]] std::string first_failure() const { return failures.empty() ? "" : failures.front(); }
};

}  // namespace klr
