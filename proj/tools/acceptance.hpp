#pragma once

#include <memory>
#include <string>
#include <vector>

#include "klr/convex.hpp"
#include "klr/report.hpp"

namespace klr::acceptance {

struct Options {
  /// Restricts type-dependent criteria to these labels; empty means all.
  std::vector<std::string> types;
  unsigned seed = 2024;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  Report report;
  double seconds = 0;
  bool skipped = false;  // no requested type applies
};

inline constexpr int kCriteria = 12;

CriterionResult run_criterion(int id, const Options& opts);
std::vector<CriterionResult> run_all(const Options& opts);

/// The three convex orders exercised for a type. For A1~ the first one is
/// alpha_1 > delta > alpha_0.
std::vector<ConvexPreorder> tested_orders(const std::shared_ptr<const CartanData>& cd);

/// "PASS  3  title  (checks, seconds)" or FAIL with the first witness.
std::string format_line(const CriterionResult& r);

}  // namespace klr::acceptance
