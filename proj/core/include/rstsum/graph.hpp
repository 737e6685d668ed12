#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rstsum/document.hpp"
#include "rstsum/weight_config.hpp"

namespace rstsum {

struct GraphNode {
  std::string id;
  UnitKind kind = UnitKind::esu;
  std::optional<MediaType> media;
  std::optional<double> duration_s;
  /// The ECU that names this unit as its main unit, if any.
  std::optional<std::string> is_main_unit_of;
  std::vector<std::string> topics;
};

struct GraphEdge {
  std::string source;
  std::string target;
  RelationCategory category = RelationCategory::nucleus_satellite;
  std::string rel_type;
  int orbit = 1;
  double coefficient = 0.0;
  /// Index of the relation this edge was expanded from.
  std::size_t relation_index = 0;
};

/// Rhetorical relations graph. Nucleus-satellite relations become one edge
/// nucleus -> satellite; a multi-nucleus relation over [m1, ..., mk] becomes
/// the star m1 -> mi. Nodes keep document order, edges declaration order.
///
/// Traversal works on *resolved* nodes: an ECU stands for its main unit,
/// applied recursively until an ESU is reached.
class RhetGraph {
 public:
  RhetGraph(std::vector<GraphNode> nodes, std::vector<GraphEdge> edges, std::string root);

  const std::vector<GraphNode>& nodes() const noexcept { return nodes_; }
  const std::vector<GraphEdge>& edges() const noexcept { return edges_; }
  const std::string& root() const noexcept { return root_; }

  std::optional<std::size_t> index_of(std::string_view id) const;
  const GraphNode* find(std::string_view id) const;
  const GraphNode& node(std::size_t index) const { return nodes_.at(index); }
  std::size_t size() const noexcept { return nodes_.size(); }

  /// Index of the ESU that `index` delegates to (itself for an ESU).
  std::size_t resolved(std::size_t index) const { return resolved_.at(index); }
  std::size_t resolved_root() const { return resolved_.at(root_index_); }
  std::size_t edge_source(std::size_t edge) const { return edge_ends_.at(edge).first; }
  std::size_t edge_target(std::size_t edge) const { return edge_ends_.at(edge).second; }

  /// Edges whose resolved source is the resolved node `index`, in
  /// declaration order. Empty for ECUs.
  std::span<const std::size_t> outgoing(std::size_t index) const;
  /// Nucleus-satellite edges whose resolved target is `index`.
  std::span<const std::size_t> incoming_satellite_edges(std::size_t index) const;

  /// True when the resolved node has at least one outgoing nucleus-satellite
  /// edge, i.e. it acts as a nucleus somewhere.
  bool acts_as_nucleus(std::size_t index) const;

  /// Resolved ESU indices every nucleus of `index` resolves to, in edge order
  /// without duplicates. These are the units a satellite cannot appear without.
  std::vector<std::size_t> nuclei_of(std::size_t index) const;

 private:
  std::vector<GraphNode> nodes_;
  std::vector<GraphEdge> edges_;
  std::string root_;
  std::size_t root_index_ = 0;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::size_t> resolved_;
  std::vector<std::pair<std::size_t, std::size_t>> edge_ends_;
  std::vector<std::vector<std::size_t>> outgoing_;
  std::vector<std::vector<std::size_t>> incoming_ns_;
};

/// unit id -> hierarchy level. Units the traversal never reaches are absent.
using LevelMap = std::map<std::string, int, std::less<>>;

/// Validates `doc` (InputError on any diagnostic) and builds its graph with
/// coefficients looked up in `config` (ConfigError on an unknown type).
RhetGraph build_graph(const DocumentSpec& doc, const WeightConfig& config);

/// Depth-first from the root in edge declaration order. The root gets level
/// 0 and each newly reached unit its predecessor's level + 1; an ECU carries
/// its main unit's level. First assignment wins.
LevelMap compute_levels(const RhetGraph& graph);

/// One cycle per strongly connected component of the resolved edge relation,
/// each rotated to start at its lexicographically smallest id. Components are
/// reported in order of that id.
std::vector<std::vector<std::string>> detect_cycles(const RhetGraph& graph);

namespace detail {
/// build_graph without validation. Requires every referenced id to exist and
/// ECU membership to be a forest.
RhetGraph assemble_graph(const DocumentSpec& doc, const WeightConfig& config);
}  // namespace detail

}  // namespace rstsum
