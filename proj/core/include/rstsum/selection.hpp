#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rstsum/document.hpp"
#include "rstsum/graph.hpp"

namespace rstsum {

enum class SkipReason { over_budget, nucleus_absent, closure_removed };

std::string_view to_string(SkipReason reason);

struct SkippedUnit {
  std::string id;
  SkipReason reason = SkipReason::over_budget;

  friend bool operator==(const SkippedUnit&, const SkippedUnit&) = default;
};

struct SelectionResult {
  /// Document order.
  std::vector<std::string> selected;
  double total_duration_s = 0.0;
  /// In the order the greedy pass decided them.
  std::vector<SkippedUnit> skipped;
};

/// Greedy pass, most important first. A satellite whose nuclei are not all in
/// yet is skipped (nucleus_absent) and the pass continues; the first unit that
/// would overflow the budget stops the pass, and it and everything ranked
/// below it are skipped as over_budget. A final sweep drops any satellite left
/// without its nucleus (closure_removed). Ids that are not ESUs are ignored.
SelectionResult trim_to_budget(std::span<const std::string> ranked, const RhetGraph& graph,
                               const SummaryBudget& budget);

enum class ViolationKind { budget, closure, unknown_unit, total_mismatch };

struct SelectionViolation {
  ViolationKind kind;
  std::string id;
  std::string detail;
};

/// Independent check of a selection: total within budget, reported total
/// matching the selected durations, and every selected satellite accompanied
/// by each of its nuclei.
std::vector<SelectionViolation> verify_selection(const SelectionResult& result,
                                                 const RhetGraph& graph,
                                                 const SummaryBudget& budget);

}  // namespace rstsum
