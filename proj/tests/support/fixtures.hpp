#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rstsum/document.hpp"

namespace rstsum::testing {

inline std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(RSTSUM_FIXTURE_DIR) / name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline DocumentSpec space_fixture() { return parse_document_spec(read_fixture("space_exploration.json")); }

inline Unit esu(std::string id, MediaType media = MediaType::text, double duration = 10.0,
                std::vector<std::string> topics = {}) {
  Unit u;
  u.id = std::move(id);
  u.kind = UnitKind::esu;
  u.media = media;
  u.duration_s = duration;
  u.topics = std::move(topics);
  return u;
}

inline Unit ecu(std::string id, std::vector<std::string> members, std::string main_unit) {
  Unit u;
  u.id = std::move(id);
  u.kind = UnitKind::ecu;
  u.members = std::move(members);
  u.main_unit = std::move(main_unit);
  return u;
}

inline Relation ns(std::string nucleus, std::string satellite, std::string type = "Elaboration", int orbit = 1) {
  Relation r;
  r.category = RelationCategory::nucleus_satellite;
  r.rel_type = std::move(type);
  r.nucleus = std::move(nucleus);
  r.satellite = std::move(satellite);
  r.orbit = orbit;
  return r;
}

inline Relation multi(std::vector<std::string> members, std::string type = "Joint") {
  Relation r;
  r.category = RelationCategory::multi_nucleus;
  r.rel_type = std::move(type);
  r.members = std::move(members);
  return r;
}

inline DocumentSpec make_doc(std::vector<Unit> units, std::vector<Relation> relations) {
  DocumentSpec doc;
  doc.title = "test";
  doc.root = units.empty() ? std::string() : units.front().id;
  doc.units = std::move(units);
  doc.relations = std::move(relations);
  return doc;
}

}  // namespace rstsum::testing
