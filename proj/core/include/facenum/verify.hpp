#pragma once

#include <string>
#include <vector>

namespace facenum {

/// Outcome of one acceptance criterion. `passed` includes the time budget.
struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

inline constexpr int criterion_count = 11;

/// Runs criterion `id` (1-based). Exceptions thrown by the checks are
/// reported as failures. Throws InvalidArgument for an unknown id.
CriterionResult run_criterion(int id);

/// All criteria in order.
std::vector<CriterionResult> run_acceptance();

/// "PASS  3  title (0.12 s): detail" style line.
std::string format_result(const CriterionResult& r);

}  // namespace facenum
