#include "rstsum/selection.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace rstsum {

std::string_view to_string(SkipReason reason) {
  switch (reason) {
    case SkipReason::over_budget: return "over_budget";
    case SkipReason::nucleus_absent: return "nucleus_absent";
    case SkipReason::closure_removed: return "closure_removed";
  }
  return "over_budget";
}

SelectionResult trim_to_budget(std::span<const std::string> ranked, const RhetGraph& graph,
                               const SummaryBudget& budget) {
  const std::size_t n = graph.size();
  std::vector<bool> included(n, false);
  std::vector<bool> decided(n, false);
  SelectionResult result;
  double running = 0.0;
  bool stopped = false;

  for (const std::string& id : ranked) {
    auto index = graph.index_of(id);
    if (!index || graph.node(*index).kind != UnitKind::esu || decided[*index]) continue;
    const std::size_t u = *index;
    decided[u] = true;
    if (stopped) {
      result.skipped.push_back({id, SkipReason::over_budget});
      continue;
    }
    const auto nuclei = graph.nuclei_of(u);
    if (!std::all_of(nuclei.begin(), nuclei.end(), [&](std::size_t v) { return included[v]; })) {
      result.skipped.push_back({id, SkipReason::nucleus_absent});
      continue;
    }
    const double duration = graph.node(u).duration_s.value_or(0.0);
    if (running + duration > budget.max_duration_s()) {
      result.skipped.push_back({id, SkipReason::over_budget});
      stopped = true;
      continue;
    }
    included[u] = true;
    running += duration;
  }

  // Closure sweep, to a fixpoint.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t u = 0; u < n; ++u) {
      if (!included[u]) continue;
      const auto nuclei = graph.nuclei_of(u);
      if (std::all_of(nuclei.begin(), nuclei.end(), [&](std::size_t v) { return included[v]; })) continue;
      included[u] = false;
      result.skipped.push_back({graph.node(u).id, SkipReason::closure_removed});
      changed = true;
    }
  }

  double total = 0.0;
  for (std::size_t u = 0; u < n; ++u) {
    if (!included[u]) continue;
    result.selected.push_back(graph.node(u).id);
    total += graph.node(u).duration_s.value_or(0.0);
  }
  result.total_duration_s = total;
  return result;
}

std::vector<SelectionViolation> verify_selection(const SelectionResult& result, const RhetGraph& graph,
                                                 const SummaryBudget& budget) {
  std::vector<SelectionViolation> out;
  std::vector<std::string> present;
  double total = 0.0;
  for (const auto& id : result.selected) {
    const GraphNode* node = graph.find(id);
    if (node == nullptr || node->kind != UnitKind::esu) {
      out.push_back({ViolationKind::unknown_unit, id, "selected id is not an ESU of the graph"});
      continue;
    }
    present.push_back(id);
    total += node->duration_s.value_or(0.0);
  }

  const double slack = 1e-9 * std::max(1.0, budget.max_duration_s());
  if (total > budget.max_duration_s() + slack) {
    out.push_back({ViolationKind::budget, result.selected.empty() ? std::string() : result.selected.back(),
                   fmt::format("selected duration {} s exceeds budget {} s", total, budget.max_duration_s())});
  }
  if (std::abs(total - result.total_duration_s) > slack) {
    out.push_back({ViolationKind::total_mismatch, "total_duration_s",
                   fmt::format("reported {} s but selected units sum to {} s", result.total_duration_s, total)});
  }

  // A satellite needs every unit that is a nucleus to it, where an ECU on
  // either end stands for its main unit.
  auto is_present = [&](std::string_view id) {
    return std::find(present.begin(), present.end(), id) != present.end();
  };
  auto stand_in = [&](std::string_view id) -> std::string {
    const GraphNode* node = graph.find(id);
    while (node != nullptr && node->kind == UnitKind::ecu) {
      const GraphNode* next = nullptr;
      for (const auto& candidate : graph.nodes()) {
        if (candidate.is_main_unit_of && *candidate.is_main_unit_of == node->id) next = &candidate;
      }
      node = next;
    }
    return node == nullptr ? std::string() : node->id;
  };
  for (const auto& edge : graph.edges()) {
    if (edge.category != RelationCategory::nucleus_satellite) continue;
    const std::string satellite = stand_in(edge.target);
    const std::string nucleus = stand_in(edge.source);
    if (satellite == nucleus || !is_present(satellite) || is_present(nucleus)) continue;
    out.push_back({ViolationKind::closure, satellite,
                   "satellite selected without its nucleus '" + nucleus + "' (" + edge.rel_type + ")"});
  }
  return out;
}

}  // namespace rstsum
