#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rstsum/document.hpp"
#include "rstsum/graph.hpp"
#include "rstsum/weighting.hpp"

namespace rstsum {

enum class TieMethod {
  media_hierarchy,
  role_precedence,
  user_intervention,
  document_order_fallback,
};

std::string_view to_string(TieMethod method);

struct TieDecision {
  std::vector<std::string> group;
  /// Always a permutation of `group`.
  std::vector<std::string> chosen_order;
  TieMethod method = TieMethod::document_order_fallback;
  std::string detail;
};

/// What the interaction callback is shown for each tied unit.
struct UnitSummary {
  std::string id;
  std::optional<MediaType> media;
  std::optional<double> duration_s;
  double raw_weight = 0.0;
};

/// Returns the ids of `units` in the order the user wants. Anything other
/// than a permutation, or an exception, is an interaction failure.
using TiePrompt = std::function<std::vector<std::string>(std::span<const UnitSummary> units)>;

struct TieBreakOptions {
  /// Called at most once per residual run, only when the profile is
  /// interactive.
  TiePrompt prompt;
  /// Throw InteractionError instead of falling back to document order.
  bool strict = false;
};

/// Orders each group by, in turn: media type per the profile hierarchy;
/// rhetorical role (nuclei before pure satellites, then more outgoing
/// nucleus-satellite edges first); profile topic interest; the user, when
/// interactive; document order. `method` names the first criterion that
/// separated any members (topic interest is reported as media_hierarchy,
/// being a profile preference).
std::vector<TieDecision> resolve_equal_weights(std::span<const TieGroup> groups,
                                               const RhetGraph& graph,
                                               const UserProfile& profile,
                                               const TieBreakOptions& options = {});

/// Rewrites each tie group's slice of `ranking.order` with its decision.
void apply_tie_decisions(Ranking& ranking, std::span<const TieDecision> decisions);

}  // namespace rstsum
