#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rstsum/document.hpp"
#include "rstsum/graph.hpp"
#include "rstsum/selection.hpp"
#include "rstsum/tiebreak.hpp"
#include "rstsum/weight_config.hpp"
#include "rstsum/weighting.hpp"

namespace rstsum {

struct ManifestEntry {
  std::string id;
  MediaType media = MediaType::text;
  double duration_s = 0.0;
  double raw_weight = 0.0;
  double normalized_weight = 0.0;
  int level = 0;
  int rank = 0;
  /// ECUs present in the summary because this is their main unit.
  std::vector<std::string> main_unit_of;
};

struct Toolchain {
  std::string version;
  WeightConfig config;
  bool pre_weighted = false;
};

struct SummaryManifest {
  std::string document_title;
  double budget_s = 0.0;
  double total_duration_s = 0.0;
  /// Document order.
  std::vector<ManifestEntry> entries;
  std::vector<TieDecision> tie_decisions;
  std::vector<SkippedUnit> skipped;
  Toolchain toolchain;
};

/// Throws ConsistencyError when a selected id is not an ESU of `doc` or has
/// no weight record.
SummaryManifest emit_manifest(const SelectionResult& result, const WeightTable& weights,
                              std::span<const TieDecision> ties, const DocumentSpec& doc,
                              const SummaryBudget& budget, Toolchain toolchain);

/// Canonical JSON: sorted keys, two-space indent, numbers rounded to six
/// decimals, trailing newline. Identical manifests give identical bytes.
std::string serialize_manifest(const SummaryManifest& manifest);

std::string render_markdown(const SummaryManifest& manifest, const DocumentSpec& doc);

std::string export_dot(const RhetGraph& graph, const WeightTable& weights, const LevelMap& levels);

}  // namespace rstsum
