#include <vector>

#include "rstsum/document.hpp"
#include "rstsum/graph.hpp"

namespace rstsum {

std::vector<Diagnostic> validate_document(const DocumentSpec& doc) {
  std::vector<Diagnostic> out = structural_diagnostics(doc);
  if (!out.empty()) return out;

  // Coefficients play no part in the shape checks; a permissive config keeps
  // unknown relation types from masking structural problems.
  WeightConfig shape_only;
  shape_only.default_coefficient = 1.0;
  const RhetGraph graph = detail::assemble_graph(doc, shape_only);

  const auto cycles = detect_cycles(graph);
  for (const auto& cycle : cycles) {
    std::string path;
    for (const auto& id : cycle) path += id + " -> ";
    path += cycle.front();
    out.push_back({DiagnosticKind::cycle, cycle.front(), "relation cycle " + path});
  }
  if (!cycles.empty()) return out;

  const LevelMap levels = compute_levels(graph);
  for (const auto& node : graph.nodes()) {
    if (!levels.contains(node.id)) {
      out.push_back({DiagnosticKind::reachability, node.id, "unit is not reachable from root '" + doc.root + "'"});
    }
  }
  return out;
}

}  // namespace rstsum
