#include "rstsum/document.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json_reader.hpp"

namespace rstsum {

using detail::Json;
using detail::ObjectReader;
using detail::schema_error;

// ---------------------------------------------------------------------------
// Errors

std::string_view to_string(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::syntax: return "syntax";
    case DiagnosticKind::schema: return "schema";
    case DiagnosticKind::reference: return "reference";
    case DiagnosticKind::model: return "model";
    case DiagnosticKind::cycle: return "cycle";
    case DiagnosticKind::reachability: return "reachability";
  }
  return "unknown";
}

namespace {

std::string summarize(const std::vector<Diagnostic>& diagnostics) {
  if (diagnostics.empty()) return "invalid input";
  const Diagnostic& d = diagnostics.front();
  std::string msg = std::string(to_string(d.kind)) + " error: " + d.subject + ": " + d.reason;
  if (diagnostics.size() > 1) msg += " (+" + std::to_string(diagnostics.size() - 1) + " more)";
  return msg;
}

}  // namespace

InputError::InputError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {
  if (diagnostics_.empty()) {
    diagnostics_.push_back({DiagnosticKind::model, "document", "invalid input"});
  }
}

InputError::InputError(DiagnosticKind kind, std::string subject, std::string reason)
    : InputError(std::vector<Diagnostic>{{kind, std::move(subject), std::move(reason)}}) {}

ConfigError::ConfigError(std::string subject, const std::string& reason)
    : std::runtime_error(subject + ": " + reason), subject_(std::move(subject)) {}

// ---------------------------------------------------------------------------
// Vocabulary

std::string_view to_string(MediaType media) {
  switch (media) {
    case MediaType::text: return "text";
    case MediaType::image: return "image";
    case MediaType::video: return "video";
    case MediaType::audio: return "audio";
  }
  return "text";
}

std::optional<MediaType> parse_media_type(std::string_view name) {
  for (MediaType m : kAllMediaTypes) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::string_view to_string(UnitKind kind) { return kind == UnitKind::esu ? "esu" : "ecu"; }

std::string_view to_string(RelationCategory category) {
  return category == RelationCategory::nucleus_satellite ? "nucleus_satellite" : "multi_nucleus";
}

std::string relation_label(std::size_t index) { return "relation#" + std::to_string(index); }

const Unit* DocumentSpec::find_unit(std::string_view id) const {
  auto it = std::find_if(units.begin(), units.end(), [&](const Unit& u) { return u.id == id; });
  return it == units.end() ? nullptr : &*it;
}

std::optional<std::size_t> DocumentSpec::position_of(std::string_view id) const {
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (units[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t UserProfile::media_rank(MediaType media) const {
  auto it = std::find(media_hierarchy.begin(), media_hierarchy.end(), media);
  return static_cast<std::size_t>(it - media_hierarchy.begin());
}

double UserProfile::topic_score(const std::vector<std::string>& tags) const {
  double best = 0.0;
  for (const auto& interest : topics) {
    if (std::find(tags.begin(), tags.end(), interest.tag) != tags.end()) {
      best = std::max(best, interest.weight);
    }
  }
  return best;
}

UserProfile default_profile() { return UserProfile{}; }

SummaryBudget::SummaryBudget(double max_duration_s) : max_duration_s_(max_duration_s) {
  if (!(max_duration_s > 0.0) || !std::isfinite(max_duration_s)) {
    throw InputError(DiagnosticKind::schema, "time", "summary budget must be a positive number of seconds");
  }
}

// ---------------------------------------------------------------------------
// Structural checks

std::vector<Diagnostic> structural_diagnostics(const DocumentSpec& doc) {
  std::vector<Diagnostic> out;
  auto model = [&](std::string subject, std::string reason) {
    out.push_back({DiagnosticKind::model, std::move(subject), std::move(reason)});
  };
  auto reference = [&](std::string subject, std::string reason) {
    out.push_back({DiagnosticKind::reference, std::move(subject), std::move(reason)});
  };

  if (doc.units.empty()) {
    model("units", "document has no units");
    return out;
  }

  std::map<std::string, std::size_t, std::less<>> positions;
  for (std::size_t i = 0; i < doc.units.size(); ++i) {
    const Unit& u = doc.units[i];
    if (u.id.empty()) {
      model("units[" + std::to_string(i) + "]", "unit id is empty");
      continue;
    }
    if (!positions.emplace(u.id, i).second) model(u.id, "duplicate unit id");
  }
  auto known = [&](std::string_view id) { return positions.find(id) != positions.end(); };

  if (!known(doc.root)) {
    reference(doc.root.empty() ? std::string("root") : doc.root, "root does not name a unit");
  } else if (doc.units.front().id != doc.root) {
    model(doc.root, "root must be the first listed unit");
  }

  // unit id -> ECU that contains it
  std::map<std::string, std::string, std::less<>> container;
  for (const Unit& u : doc.units) {
    if (u.preset_weight && !(*u.preset_weight >= 0.0)) model(u.id, "preset_weight must be non-negative");
    if (u.is_esu()) {
      if (!u.media) model(u.id, "ESU without media type");
      if (!u.duration_s) {
        model(u.id, "ESU without duration_s");
      } else if (!(*u.duration_s >= 0.0)) {
        model(u.id, "duration_s must be non-negative");
      }
      if (!u.members.empty() || u.main_unit) model(u.id, "ESU cannot have members or a main unit");
      continue;
    }
    if (u.media || u.duration_s) model(u.id, "ECU cannot carry media or duration_s");
    if (u.members.empty()) model(u.id, "ECU without members");
    if (!u.main_unit) {
      model(u.id, "ECU without main unit");
    } else if (std::find(u.members.begin(), u.members.end(), *u.main_unit) == u.members.end()) {
      model(u.id, "main unit '" + *u.main_unit + "' is not a member of the ECU");
    }
    std::set<std::string_view> seen;
    for (const auto& m : u.members) {
      if (m == u.id) {
        model(u.id, "ECU lists itself as a member");
        continue;
      }
      if (!known(m)) {
        reference(u.id, "member '" + m + "' does not name a unit");
        continue;
      }
      if (!seen.insert(m).second) {
        model(u.id, "member '" + m + "' listed twice");
        continue;
      }
      auto [it, inserted] = container.emplace(m, u.id);
      if (!inserted) model(m, "unit belongs to both '" + it->second + "' and '" + u.id + "'");
    }
  }

  // Nested ECUs must not contain each other.
  for (const auto& [unit, parent] : container) {
    std::set<std::string_view> chain{unit};
    std::string_view cur = parent;
    while (true) {
      if (!chain.insert(cur).second) {
        if (cur == unit) model(unit, "ECU membership forms a cycle");
        break;
      }
      auto it = container.find(cur);
      if (it == container.end()) break;
      cur = it->second;
    }
  }

  for (std::size_t i = 0; i < doc.relations.size(); ++i) {
    const Relation& r = doc.relations[i];
    const std::string label = relation_label(i);
    if (r.rel_type.empty()) model(label, "relation has an empty rel_type");
    if (r.category == RelationCategory::nucleus_satellite) {
      if (!known(r.nucleus)) reference(label, "nucleus '" + r.nucleus + "' does not name a unit");
      if (!known(r.satellite)) reference(label, "satellite '" + r.satellite + "' does not name a unit");
      if (r.nucleus == r.satellite) model(label, "nucleus and satellite are the same unit '" + r.nucleus + "'");
      if (r.orbit < 1) model(label, "orbit must be at least 1");
      if (!r.members.empty()) model(label, "nucleus-satellite relation cannot list members");
    } else {
      if (r.members.size() < 2) model(label, "multi-nucleus relation needs at least two members");
      std::set<std::string_view> seen;
      for (const auto& m : r.members) {
        if (!known(m)) reference(label, "member '" + m + "' does not name a unit");
        if (!seen.insert(m).second) model(label, "member '" + m + "' listed twice");
      }
      if (!r.nucleus.empty() || !r.satellite.empty()) {
        model(label, "multi-nucleus relation cannot name a nucleus or satellite");
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

Unit read_unit(const Json& value, const std::string& path) {
  ObjectReader r(value, path);
  r.allow_only({"id", "kind", "media", "duration_s", "members", "main_unit", "topics", "preset_weight"});
  Unit u;
  u.id = r.string("id");
  const std::string kind = r.string("kind");
  if (kind == "esu") {
    u.kind = UnitKind::esu;
    const std::string media = r.string("media");
    u.media = parse_media_type(media);
    if (!u.media) schema_error(r.child("media"), "unknown media type '" + media + "'");
    u.duration_s = r.number("duration_s");
    if (r.has("members") || r.has("main_unit")) {
      throw InputError(DiagnosticKind::model, u.id, "ESU cannot have members or a main unit");
    }
  } else if (kind == "ecu") {
    u.kind = UnitKind::ecu;
    if (r.has("media") || r.has("duration_s")) {
      throw InputError(DiagnosticKind::model, u.id, "ECU cannot carry media or duration_s");
    }
    u.members = r.string_list("members");
    u.main_unit = r.optional_string("main_unit");
  } else {
    schema_error(r.child("kind"), "expected \"esu\" or \"ecu\"");
  }
  u.topics = r.string_list("topics");
  u.preset_weight = r.optional_number("preset_weight");
  return u;
}

Relation read_relation(const Json& value, const std::string& path) {
  ObjectReader r(value, path);
  r.allow_only({"category", "rel_type", "nucleus", "satellite", "orbit", "members"});
  Relation rel;
  const std::string category = r.string("category");
  rel.rel_type = r.string("rel_type");
  if (category == "nucleus_satellite") {
    rel.category = RelationCategory::nucleus_satellite;
    rel.nucleus = r.string("nucleus");
    rel.satellite = r.string("satellite");
    if (auto orbit = r.optional_integer("orbit")) {
      if (*orbit < 1 || *orbit > 1'000'000) schema_error(r.child("orbit"), "orbit must be a positive integer");
      rel.orbit = static_cast<int>(*orbit);
    }
    if (r.has("members")) schema_error(r.child("members"), "not allowed on a nucleus_satellite relation");
  } else if (category == "multi_nucleus") {
    rel.category = RelationCategory::multi_nucleus;
    rel.members = r.string_list("members");
    if (!r.has("members")) schema_error(r.child("members"), "missing required field");
    for (auto key : {"nucleus", "satellite", "orbit"}) {
      if (r.has(key)) schema_error(r.child(key), "not allowed on a multi_nucleus relation");
    }
  } else {
    schema_error(r.child("category"), "expected \"nucleus_satellite\" or \"multi_nucleus\"");
  }
  return rel;
}

}  // namespace

DocumentSpec parse_document_spec(std::string_view text) {
  const Json root = detail::parse_json_text(text, "document");
  ObjectReader r(root, "");
  r.allow_only({"title", "root", "units", "relations"});

  DocumentSpec doc;
  doc.title = r.string("title");
  doc.root = r.string("root");

  const Json* units = r.optional_array("units");
  if (units == nullptr) schema_error("units", "missing required field");
  if (units->empty()) schema_error("units", "document has no units");
  for (std::size_t i = 0; i < units->size(); ++i) {
    doc.units.push_back(read_unit((*units)[i], "units[" + std::to_string(i) + "]"));
  }
  if (const Json* relations = r.optional_array("relations")) {
    for (std::size_t i = 0; i < relations->size(); ++i) {
      doc.relations.push_back(read_relation((*relations)[i], "relations[" + std::to_string(i) + "]"));
    }
  }

  if (auto diagnostics = structural_diagnostics(doc); !diagnostics.empty()) {
    throw InputError(std::move(diagnostics));
  }
  return doc;
}

std::string serialize_document(const DocumentSpec& doc) {
  Json units = Json::array();
  for (const Unit& u : doc.units) {
    Json j = {{"id", u.id}, {"kind", std::string(to_string(u.kind))}};
    if (u.media) j["media"] = std::string(to_string(*u.media));
    if (u.duration_s) j["duration_s"] = *u.duration_s;
    if (u.is_ecu()) j["members"] = u.members;
    if (u.main_unit) j["main_unit"] = *u.main_unit;
    if (!u.topics.empty()) j["topics"] = u.topics;
    if (u.preset_weight) j["preset_weight"] = *u.preset_weight;
    units.push_back(std::move(j));
  }
  Json relations = Json::array();
  for (const Relation& rel : doc.relations) {
    Json j = {{"category", std::string(to_string(rel.category))}, {"rel_type", rel.rel_type}};
    if (rel.category == RelationCategory::nucleus_satellite) {
      j["nucleus"] = rel.nucleus;
      j["satellite"] = rel.satellite;
      j["orbit"] = rel.orbit;
    } else {
      j["members"] = rel.members;
    }
    relations.push_back(std::move(j));
  }
  Json out = {{"title", doc.title}, {"root", doc.root}, {"units", std::move(units)},
              {"relations", std::move(relations)}};
  return out.dump(2) + "\n";
}

UserProfile parse_user_profile(std::string_view text) {
  const Json root = detail::parse_json_text(text, "profile");
  ObjectReader r(root, "");
  r.allow_only({"media_hierarchy", "topics", "interactive"});

  UserProfile profile;
  const std::vector<std::string> names = r.string_list("media_hierarchy");
  if (!r.has("media_hierarchy")) schema_error("media_hierarchy", "missing required field");

  std::vector<MediaType> hierarchy;
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto media = parse_media_type(names[i]);
    if (!media) schema_error("media_hierarchy[" + std::to_string(i) + "]", "unknown media type '" + names[i] + "'");
    hierarchy.push_back(*media);
  }
  std::vector<MediaType> sorted = hierarchy;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::vector<MediaType>(kAllMediaTypes.begin(), kAllMediaTypes.end())) {
    throw InputError(DiagnosticKind::model, "media_hierarchy",
                     "must list each of text, image, video, audio exactly once");
  }
  std::copy(hierarchy.begin(), hierarchy.end(), profile.media_hierarchy.begin());

  if (const Json* topics = r.optional_array("topics")) {
    for (std::size_t i = 0; i < topics->size(); ++i) {
      ObjectReader t((*topics)[i], "topics[" + std::to_string(i) + "]");
      t.allow_only({"tag", "weight"});
      TopicInterest interest{t.string("tag"), t.number("weight")};
      if (interest.weight < 0.0 || interest.weight > 1.0) {
        schema_error(t.child("weight"), "topic weight must lie in [0, 1]");
      }
      profile.topics.push_back(std::move(interest));
    }
  }
  profile.interactive = r.optional_bool("interactive").value_or(false);
  return profile;
}

}  // namespace rstsum
