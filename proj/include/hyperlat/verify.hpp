#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperlat/golden.hpp"

namespace hyperlat {

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct ModuleFilter {
  std::string name;
  int level = 0;
};

struct VerifyOptions {
  bool full = true;  // false: skip the slow checks (E21 enumeration)
  std::optional<ModuleFilter> module;
  std::vector<int> criteria;  // empty: all
  unsigned threads = 0;       // 0: hardware concurrency
};

/// Runs the golden comparisons and property checks against `table`.
/// Exceptions inside a check are reported as failures of that check.
std::vector<CheckResult> run_checks(const GoldenTable& table, const VerifyOptions& options);

/// Wall-clock budget of each acceptance criterion in seconds.
double criterion_budget(int criterion);

/// One-line summary of a criterion over the results belonging to it.
struct CriterionSummary {
  int criterion = 0;
  bool passed = false;
  std::size_t checks = 0;
  std::size_t failures = 0;
  double seconds = 0;
  std::string first_failure;
};
std::vector<CriterionSummary> summarize(const std::vector<CheckResult>& results);

}  // namespace hyperlat
