#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rstsum/document.hpp"
#include "rstsum/graph.hpp"
#include "rstsum/weight_config.hpp"

namespace rstsum {

struct WeightRecord {
  std::string id;
  double raw_weight = 0.0;
  double normalized_weight = 0.0;
  int level = 0;
  /// 1-based position in the ranking. An ECU shares its main unit's rank.
  int rank = 0;
  /// ESUs are selectable; ECUs are not.
  bool selectable = true;
  /// The ESU this record stands for: its own id, or an ECU's main unit
  /// (followed through nested ECUs).
  std::string represents;
};

/// Per-unit weights in document order.
class WeightTable {
 public:
  WeightTable() = default;
  explicit WeightTable(std::vector<WeightRecord> records);

  const std::vector<WeightRecord>& records() const noexcept { return records_; }
  const WeightRecord* find(std::string_view id) const;
  bool empty() const noexcept { return records_.empty(); }
  std::size_t size() const noexcept { return records_.size(); }

  /// Rewrites ranks so that `order` (selectable ids, most important first)
  /// maps to 1..n; ECUs take the rank of the unit they resolve to.
  void assign_ranks(std::span<const std::string> order);

 private:
  std::vector<WeightRecord> records_;
};

/// A maximal run of equal-weight units inside a ranking.
struct TieGroup {
  /// Position of the first member in Ranking::order.
  std::size_t offset = 0;
  std::vector<std::string> ids;
  double raw_weight = 0.0;
};

struct Ranking {
  /// Selectable ids, raw weight descending, ties in document order.
  std::vector<std::string> order;
  std::vector<TieGroup> tie_groups;
};

/// Relative tolerance under which two raw weights count as equal.
inline constexpr double kWeightTieTolerance = 1e-9;
bool weights_tie(double a, double b);

/// Traverses the graph from the root:
///  (a) over a multi-nucleus edge the destination copies the source weight;
///  (b) a destination that is only ever a satellite gets, after all other
///      weights settle, the sum over its incoming nucleus-satellite edges of
///      coefficient * weight(nucleus) / orbit;
///  (c) a destination that acts as a nucleus elsewhere, reached over a
///      nucleus-satellite edge, gets weight(source) + nucleus_increment;
///  (d) an ECU delegates to its main unit and reports the main unit's weight.
/// The root starts at base_value. First visit decides a unit's rule.
WeightTable compute_weights(const RhetGraph& graph, const LevelMap& levels,
                            const WeightConfig& config);

/// Takes raw weights from each unit's preset_weight. Throws InputError when
/// an ESU has none. ECUs without a preset report their main unit's weight.
WeightTable apply_preset_weights(const DocumentSpec& doc, const LevelMap& levels);
WeightTable apply_preset_weights(const DocumentSpec& doc);

Ranking rank_entities(const WeightTable& weights);

}  // namespace rstsum
