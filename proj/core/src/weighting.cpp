#include "rstsum/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "json_reader.hpp"

namespace rstsum {

// ---------------------------------------------------------------------------
// Configuration

double WeightConfig::coefficient_for(std::string_view rel_type) const {
  if (auto it = coefficients.find(rel_type); it != coefficients.end()) return it->second;
  if (default_coefficient) return *default_coefficient;
  throw ConfigError("rel_type '" + std::string(rel_type) + "'",
                    "no coefficient configured and no default_coefficient set");
}

void WeightConfig::validate() const {
  auto in_unit_interval = [](double c) { return std::isfinite(c) && c > 0.0 && c <= 1.0; };
  if (!(std::isfinite(base_value) && base_value > 0.0)) throw ConfigError("base_value", "must be positive");
  if (!(std::isfinite(nucleus_increment) && nucleus_increment > 0.0)) {
    throw ConfigError("nucleus_increment", "must be positive");
  }
  for (const auto& [type, c] : coefficients) {
    if (!in_unit_interval(c)) throw ConfigError("coefficients." + type, "must lie in (0, 1]");
  }
  if (default_coefficient && !in_unit_interval(*default_coefficient)) {
    throw ConfigError("default_coefficient", "must lie in (0, 1]");
  }
}

WeightConfig parse_weight_config(std::string_view text) {
  WeightConfig config;
  try {
    const detail::Json root = detail::parse_json_text(text, "config");
    detail::ObjectReader r(root, "");
    r.allow_only({"base_value", "nucleus_increment", "coefficients", "default_coefficient"});
    if (auto v = r.optional_number("base_value")) config.base_value = *v;
    if (auto v = r.optional_number("nucleus_increment")) config.nucleus_increment = *v;
    if (r.has("coefficients")) {
      const detail::Json& table = r.require("coefficients");
      detail::ObjectReader coefficients(table, "coefficients");
      for (const auto& [type, _] : table.items()) {
        config.coefficients[type] = coefficients.number(type);
      }
    }
    if (r.present("default_coefficient")) config.default_coefficient = r.optional_number("default_coefficient");
  } catch (const InputError& e) {
    const Diagnostic& d = e.diagnostics().front();
    throw ConfigError(d.subject, d.reason);
  }
  config.validate();
  return config;
}

// ---------------------------------------------------------------------------
// Weight table

WeightTable::WeightTable(std::vector<WeightRecord> records) : records_(std::move(records)) {}

const WeightRecord* WeightTable::find(std::string_view id) const {
  auto it = std::find_if(records_.begin(), records_.end(), [&](const WeightRecord& r) { return r.id == id; });
  return it == records_.end() ? nullptr : &*it;
}

void WeightTable::assign_ranks(std::span<const std::string> order) {
  std::map<std::string_view, int> rank;
  for (std::size_t i = 0; i < order.size(); ++i) rank.emplace(order[i], static_cast<int>(i + 1));
  for (auto& record : records_) {
    auto it = rank.find(record.represents);
    record.rank = it == rank.end() ? 0 : it->second;
  }
}

bool weights_tie(double a, double b) {
  if (a == b) return true;
  return std::abs(a - b) <= kWeightTieTolerance * std::max(std::abs(a), std::abs(b));
}

Ranking rank_entities(const WeightTable& weights) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < weights.records().size(); ++i) {
    if (weights.records()[i].selectable) order.push_back(i);
  }
  const auto& records = weights.records();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return records[a].raw_weight > records[b].raw_weight;
  });

  Ranking ranking;
  std::size_t begin = 0;
  while (begin < order.size()) {
    std::size_t end = begin + 1;
    while (end < order.size() && weights_tie(records[order[end - 1]].raw_weight, records[order[end]].raw_weight)) {
      ++end;
    }
    // Near-equal weights may have sorted out of document order.
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(begin), order.begin() + static_cast<std::ptrdiff_t>(end));
    if (end - begin >= 2) {
      TieGroup group{begin, {}, records[order[begin]].raw_weight};
      for (std::size_t i = begin; i < end; ++i) group.ids.push_back(records[order[i]].id);
      ranking.tie_groups.push_back(std::move(group));
    }
    begin = end;
  }
  for (std::size_t i : order) ranking.order.push_back(records[i].id);
  return ranking;
}

namespace {

void normalize(std::vector<WeightRecord>& records) {
  double max_raw = 0.0;
  for (const auto& r : records) max_raw = std::max(max_raw, r.raw_weight);
  for (auto& r : records) r.normalized_weight = max_raw > 0.0 ? r.raw_weight / max_raw : 0.0;
}

WeightTable finish(std::vector<WeightRecord> records) {
  normalize(records);
  WeightTable table(std::move(records));
  const Ranking ranking = rank_entities(table);
  table.assign_ranks(ranking.order);
  return table;
}

int level_of(const LevelMap& levels, std::string_view id) {
  auto it = levels.find(id);
  return it == levels.end() ? 0 : it->second;
}

}  // namespace

// ---------------------------------------------------------------------------
// Traversal weighting

WeightTable compute_weights(const RhetGraph& graph, const LevelMap& levels, const WeightConfig& config) {
  const std::size_t n = graph.size();
  if (n == 0) return {};

  // How each resolved unit obtains its weight, fixed on first visit.
  enum class Rule { unreached, base, copy, increment, satellite_sum };
  std::vector<Rule> rule(n, Rule::unreached);
  std::vector<std::size_t> source(n, n);

  const std::size_t start = graph.resolved_root();
  rule[start] = Rule::base;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{start, 0}};
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    auto out = graph.outgoing(node);
    if (next == out.size()) {
      stack.pop_back();
      continue;
    }
    const std::size_t edge = out[next++];
    const std::size_t dest = graph.resolved(graph.edge_target(edge));
    if (rule[dest] != Rule::unreached) continue;
    source[dest] = node;
    if (graph.edges()[edge].category == RelationCategory::multi_nucleus) {
      rule[dest] = Rule::copy;
    } else if (graph.acts_as_nucleus(dest)) {
      rule[dest] = Rule::increment;
    } else {
      rule[dest] = Rule::satellite_sum;
    }
    stack.emplace_back(dest, 0);
  }

  // Every rule reads only units with an edge into the unit being evaluated,
  // so a topological order of the resolved edges settles nuclei before the
  // satellites that sum over them.
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t e = 0; e < graph.edges().size(); ++e) ++indegree[graph.resolved(graph.edge_target(e))];
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (graph.resolved(i) == i && indegree[i] == 0) ready.push_back(i);
  }
  std::vector<std::size_t> topo;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    topo.push_back(v);
    for (std::size_t e : graph.outgoing(v)) {
      const std::size_t t = graph.resolved(graph.edge_target(e));
      if (--indegree[t] == 0) ready.push_back(t);
    }
  }

  std::vector<double> raw(n, 0.0);
  for (std::size_t v : topo) {
    switch (rule[v]) {
      case Rule::unreached: break;
      case Rule::base: raw[v] = config.base_value; break;
      case Rule::copy: raw[v] = raw[source[v]]; break;
      case Rule::increment: raw[v] = raw[source[v]] + config.nucleus_increment; break;
      case Rule::satellite_sum: {
        double sum = 0.0;
        for (std::size_t e : graph.incoming_satellite_edges(v)) {
          const GraphEdge& edge = graph.edges()[e];
          sum += edge.coefficient * raw[graph.resolved(graph.edge_source(e))] / edge.orbit;
        }
        raw[v] = sum;
        break;
      }
    }
  }

  std::vector<WeightRecord> records;
  records.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const GraphNode& node = graph.node(i);
    const std::size_t r = graph.resolved(i);
    records.push_back({node.id, raw[r], 0.0, level_of(levels, node.id), 0, node.kind == UnitKind::esu,
                       graph.node(r).id});
  }
  return finish(std::move(records));
}

// ---------------------------------------------------------------------------
// Preset weights

WeightTable apply_preset_weights(const DocumentSpec& doc, const LevelMap& levels) {
  std::vector<Diagnostic> missing;
  for (const Unit& u : doc.units) {
    if (u.is_esu() && !u.preset_weight) {
      missing.push_back({DiagnosticKind::model, u.id, "pre-weighted mode requires preset_weight"});
    }
  }
  if (!missing.empty()) throw InputError(std::move(missing));

  auto represents = [&](const Unit& u) {
    const Unit* cur = &u;
    for (std::size_t steps = 0; cur->is_ecu() && cur->main_unit && steps <= doc.units.size(); ++steps) {
      const Unit* next = doc.find_unit(*cur->main_unit);
      if (next == nullptr) break;
      cur = next;
    }
    return cur;
  };

  std::vector<WeightRecord> records;
  records.reserve(doc.units.size());
  for (const Unit& u : doc.units) {
    const Unit* target = represents(u);
    const double raw = u.preset_weight ? *u.preset_weight : target->preset_weight.value_or(0.0);
    records.push_back({u.id, raw, 0.0, level_of(levels, u.id), 0, u.is_esu(), target->id});
  }
  return finish(std::move(records));
}

WeightTable apply_preset_weights(const DocumentSpec& doc) {
  if (auto diagnostics = validate_document(doc); !diagnostics.empty()) throw InputError(std::move(diagnostics));
  WeightConfig shape_only;
  shape_only.default_coefficient = 1.0;
  return apply_preset_weights(doc, compute_levels(detail::assemble_graph(doc, shape_only)));
}

}  // namespace rstsum
