#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rstsum/errors.hpp"

namespace rstsum {

enum class MediaType { text, image, video, audio };

inline constexpr std::array<MediaType, 4> kAllMediaTypes = {
    MediaType::text, MediaType::image, MediaType::video, MediaType::audio};

std::string_view to_string(MediaType media);
std::optional<MediaType> parse_media_type(std::string_view name);

enum class UnitKind { esu, ecu };

std::string_view to_string(UnitKind kind);

/// An elementary simple unit (ESU: one text passage, image, video or audio
/// clip) or an elementary composite unit (ECU: a container whose main unit
/// stands in for it).
struct Unit {
  std::string id;
  UnitKind kind = UnitKind::esu;

  // ESU only.
  std::optional<MediaType> media;
  std::optional<double> duration_s;

  // ECU only.
  std::vector<std::string> members;
  std::optional<std::string> main_unit;

  std::vector<std::string> topics;
  std::optional<double> preset_weight;

  bool is_esu() const noexcept { return kind == UnitKind::esu; }
  bool is_ecu() const noexcept { return kind == UnitKind::ecu; }

  friend bool operator==(const Unit&, const Unit&) = default;
};

enum class RelationCategory { nucleus_satellite, multi_nucleus };

std::string_view to_string(RelationCategory category);

struct Relation {
  RelationCategory category = RelationCategory::nucleus_satellite;
  std::string rel_type;

  // Nucleus-satellite only.
  std::string nucleus;
  std::string satellite;
  int orbit = 1;

  // Multi-nucleus only; the first member is the traversal source.
  std::vector<std::string> members;

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Identifier used in diagnostics for the relation at `index`.
std::string relation_label(std::size_t index);

struct DocumentSpec {
  std::string title;
  std::string root;
  std::vector<Unit> units;
  std::vector<Relation> relations;

  const Unit* find_unit(std::string_view id) const;
  /// Position of `id` in `units`, or nullopt.
  std::optional<std::size_t> position_of(std::string_view id) const;

  friend bool operator==(const DocumentSpec&, const DocumentSpec&) = default;
};

struct TopicInterest {
  std::string tag;
  double weight = 0.0;

  friend bool operator==(const TopicInterest&, const TopicInterest&) = default;
};

struct UserProfile {
  /// Most preferred first; always a permutation of all four media types.
  std::array<MediaType, 4> media_hierarchy = kAllMediaTypes;
  std::vector<TopicInterest> topics;
  bool interactive = false;

  /// 0 for the most preferred media type, 3 for the least.
  std::size_t media_rank(MediaType media) const;
  /// Highest profile weight among `tags`, 0 when none match.
  double topic_score(const std::vector<std::string>& tags) const;

  friend bool operator==(const UserProfile&, const UserProfile&) = default;
};

/// Profile used when none is supplied: text, image, video, audio; no topics;
/// non-interactive.
UserProfile default_profile();

/// The desired summary time. Always strictly positive.
class SummaryBudget {
 public:
  explicit SummaryBudget(double max_duration_s);

  double max_duration_s() const noexcept { return max_duration_s_; }

 private:
  double max_duration_s_;
};

/// Parses a document from JSON text. Syntax and schema problems throw on the
/// first one found; reference and model problems are collected and thrown
/// together. Relation cycles and reachability are checked by
/// validate_document, not here.
DocumentSpec parse_document_spec(std::string_view text);

/// Canonical JSON for `doc`; parse_document_spec inverts it.
std::string serialize_document(const DocumentSpec& doc);

UserProfile parse_user_profile(std::string_view text);

/// Reference and model checks on a document: unique ids, root placement,
/// ECU membership, relation endpoints. Used by parse and validate.
std::vector<Diagnostic> structural_diagnostics(const DocumentSpec& doc);

/// Every structural problem plus relation cycles and units unreachable from
/// the root. Empty iff the document can be turned into a graph.
std::vector<Diagnostic> validate_document(const DocumentSpec& doc);

}  // namespace rstsum
