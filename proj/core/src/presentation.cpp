#include "rstsum/presentation.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <nlohmann/json.hpp>

namespace rstsum {

using Json = nlohmann::json;

namespace {

double fixed6(double value) {
  const double r = std::round(value * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;  // no "-0.0"
}

std::string seconds(double value) { return fmt::format("{:g}", fixed6(value)); }

Json config_echo(const Toolchain& toolchain) {
  Json coefficients = Json::object();
  for (const auto& [type, c] : toolchain.config.coefficients) coefficients[type] = fixed6(c);
  Json config = {
      {"weighting", toolchain.pre_weighted ? "preset" : "computed"},
      {"base_value", fixed6(toolchain.config.base_value)},
      {"nucleus_increment", fixed6(toolchain.config.nucleus_increment)},
      {"coefficients", std::move(coefficients)},
      {"default_coefficient", nullptr},
  };
  if (toolchain.config.default_coefficient) config["default_coefficient"] = fixed6(*toolchain.config.default_coefficient);
  return config;
}

}  // namespace

SummaryManifest emit_manifest(const SelectionResult& result, const WeightTable& weights,
                              std::span<const TieDecision> ties, const DocumentSpec& doc,
                              const SummaryBudget& budget, Toolchain toolchain) {
  SummaryManifest m;
  m.document_title = doc.title;
  m.budget_s = budget.max_duration_s();
  m.total_duration_s = result.total_duration_s;
  m.tie_decisions.assign(ties.begin(), ties.end());
  m.skipped = result.skipped;
  m.toolchain = std::move(toolchain);

  for (const auto& id : result.selected) {
    const Unit* unit = doc.find_unit(id);
    if (unit == nullptr || !unit->is_esu()) {
      throw ConsistencyError("selected unit '" + id + "' is not an ESU of document '" + doc.title + "'");
    }
    const WeightRecord* record = weights.find(id);
    if (record == nullptr) throw ConsistencyError("selected unit '" + id + "' has no weight entry");

    ManifestEntry entry;
    entry.id = id;
    entry.media = unit->media.value_or(MediaType::text);
    entry.duration_s = unit->duration_s.value_or(0.0);
    entry.raw_weight = record->raw_weight;
    entry.normalized_weight = record->normalized_weight;
    entry.level = record->level;
    entry.rank = record->rank;
    for (const auto& other : weights.records()) {
      if (!other.selectable && other.represents == id) entry.main_unit_of.push_back(other.id);
    }
    m.entries.push_back(std::move(entry));
  }
  // result.selected is already in document order; keep it that way even if
  // a caller hands over a reordered selection.
  std::stable_sort(m.entries.begin(), m.entries.end(), [&](const ManifestEntry& a, const ManifestEntry& b) {
    return doc.position_of(a.id) < doc.position_of(b.id);
  });
  return m;
}

std::string serialize_manifest(const SummaryManifest& m) {
  Json entries = Json::array();
  for (const auto& e : m.entries) {
    entries.push_back({
        {"id", e.id},
        {"media", std::string(to_string(e.media))},
        {"duration_s", fixed6(e.duration_s)},
        {"raw_weight", fixed6(e.raw_weight)},
        {"normalized_weight", fixed6(e.normalized_weight)},
        {"level", e.level},
        {"rank", e.rank},
        {"main_unit_of", e.main_unit_of},
    });
  }
  Json ties = Json::array();
  for (const auto& t : m.tie_decisions) {
    ties.push_back({
        {"group", t.group},
        {"chosen_order", t.chosen_order},
        {"method", std::string(to_string(t.method))},
        {"detail", t.detail},
    });
  }
  Json skipped = Json::array();
  for (const auto& s : m.skipped) {
    skipped.push_back({{"id", s.id}, {"reason", std::string(to_string(s.reason))}});
  }
  const Json out = {
      {"document_title", m.document_title},
      {"budget_s", fixed6(m.budget_s)},
      {"total_duration_s", fixed6(m.total_duration_s)},
      {"entries", std::move(entries)},
      {"tie_decisions", std::move(ties)},
      {"skipped", std::move(skipped)},
      {"toolchain", {{"version", m.toolchain.version}, {"config", config_echo(m.toolchain)}}},
  };
  return out.dump(2) + "\n";
}

std::string render_markdown(const SummaryManifest& m, const DocumentSpec& doc) {
  std::string out = fmt::format("# {}\n\n", m.document_title);
  out += fmt::format("Summary of {} unit{} ({} s of a {} s budget).\n", m.entries.size(),
                     m.entries.size() == 1 ? "" : "s", seconds(m.total_duration_s), seconds(m.budget_s));

  std::size_t n = 0;
  for (const auto& e : m.entries) {
    out += fmt::format("\n## Section {}\n\n", ++n);
    const Unit* unit = doc.find_unit(e.id);
    if (e.media == MediaType::text) {
      out += fmt::format("**{}** ({} s reading)\n", e.id, seconds(e.duration_s));
    } else {
      out += fmt::format("[{} asset: {}] ({} s)\n", to_string(e.media), e.id, seconds(e.duration_s));
    }
    if (unit != nullptr && !unit->topics.empty()) {
      out += "\nTopics: " + fmt::format("{}", fmt::join(unit->topics, ", ")) + "\n";
    }
    if (!e.main_unit_of.empty()) {
      out += "\nMain unit of: " + fmt::format("{}", fmt::join(e.main_unit_of, ", ")) + "\n";
    }
  }

  out += "\n---\n\n";
  out += fmt::format("Budget: {} s. Total: {} s.\n", seconds(m.budget_s), seconds(m.total_duration_s));
  std::map<std::string_view, int> methods;
  for (const auto& t : m.tie_decisions) ++methods[to_string(t.method)];
  if (methods.empty()) {
    out += "Tie-break methods used: none.\n";
  } else {
    std::vector<std::string> parts;
    for (const auto& [method, count] : methods) parts.push_back(fmt::format("{} ({})", method, count));
    out += fmt::format("Tie-break methods used: {}.\n", fmt::join(parts, ", "));
  }
  return out;
}

namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const RhetGraph& graph, const WeightTable& weights, const LevelMap& levels) {
  std::string out = "digraph rhetorical_relations {\n  node [shape=box];\n";
  for (const auto& node : graph.nodes()) {
    const WeightRecord* w = weights.find(node.id);
    auto level = levels.find(node.id);
    // Label escapes are added after quoting so the \n stays a DOT line break.
    std::string label = dot_quote(node.id);
    label.pop_back();
    label += fmt::format("\\nw={:.3f} ({:.3f})\\nL={}\"", w ? w->raw_weight : 0.0, w ? w->normalized_weight : 0.0,
                         level == levels.end() ? std::string("-") : std::to_string(level->second));
    out += fmt::format("  {} [label={}{}];\n", dot_quote(node.id), label,
                       node.kind == UnitKind::ecu ? ", style=rounded" : "");
  }
  for (const auto& edge : graph.edges()) {
    const bool multi = edge.category == RelationCategory::multi_nucleus;
    out += fmt::format("  {} -> {} [label={}, style={}];\n", dot_quote(edge.source), dot_quote(edge.target),
                       dot_quote(fmt::format("{}/{}", edge.rel_type, edge.orbit)), multi ? "dashed" : "solid");
  }
  out += "}\n";
  return out;
}

}  // namespace rstsum
