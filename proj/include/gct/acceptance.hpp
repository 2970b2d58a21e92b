#pragma once

#include <functional>
#include <string>
#include <vector>

namespace gct {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Short summary of what was checked, or the first failure.
  std::string detail;
  double seconds = 0;
  double time_limit_seconds = 0;
};

/// Runs the eleven acceptance checks in order. `on_result` is called as each
/// one finishes, so callers can stream progress.
std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS [3] title (1.23 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace gct
