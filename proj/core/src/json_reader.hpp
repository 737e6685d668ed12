#pragma once

// Strict accessors over nlohmann::json used by the input parsers. Every
// failure throws InputError with a schema diagnostic naming the JSON path.

#include <cmath>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "rstsum/errors.hpp"

namespace rstsum::detail {

using Json = nlohmann::json;

[[noreturn]] inline void schema_error(const std::string& path, const std::string& reason) {
  throw InputError(DiagnosticKind::schema, path, reason);
}

inline Json parse_json_text(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(DiagnosticKind::syntax, std::string(what), e.what());
  }
}

class ObjectReader {
 public:
  ObjectReader(const Json& value, std::string path) : value_(value), path_(std::move(path)) {
    if (!value_.is_object()) schema_error(path_, "expected an object");
  }

  void allow_only(std::initializer_list<std::string_view> keys) const {
    for (const auto& [key, _] : value_.items()) {
      bool known = false;
      for (auto k : keys) known = known || key == k;
      if (!known) schema_error(child(key), "unknown field");
    }
  }

  /// Absent and null are treated alike.
  bool has(std::string_view key) const {
    auto it = value_.find(std::string(key));
    return it != value_.end() && !it->is_null();
  }

  bool present(std::string_view key) const { return value_.contains(std::string(key)); }

  const Json& require(std::string_view key) const {
    if (!has(key)) schema_error(child(key), "missing required field");
    return value_.at(std::string(key));
  }

  std::string string(std::string_view key) const {
    const Json& v = require(key);
    if (!v.is_string()) schema_error(child(key), "expected a string");
    return v.get<std::string>();
  }

  std::optional<std::string> optional_string(std::string_view key) const {
    if (!has(key)) return std::nullopt;
    return string(key);
  }

  double number(std::string_view key) const {
    const Json& v = require(key);
    if (!v.is_number()) schema_error(child(key), "expected a number");
    double d = v.get<double>();
    if (!std::isfinite(d)) schema_error(child(key), "expected a finite number");
    return d;
  }

  std::optional<double> optional_number(std::string_view key) const {
    if (!has(key)) return std::nullopt;
    return number(key);
  }

  std::optional<long long> optional_integer(std::string_view key) const {
    if (!has(key)) return std::nullopt;
    const Json& v = value_.at(std::string(key));
    if (!v.is_number_integer()) schema_error(child(key), "expected an integer");
    return v.get<long long>();
  }

  std::optional<bool> optional_bool(std::string_view key) const {
    if (!has(key)) return std::nullopt;
    const Json& v = value_.at(std::string(key));
    if (!v.is_boolean()) schema_error(child(key), "expected a boolean");
    return v.get<bool>();
  }

  const Json* optional_array(std::string_view key) const {
    if (!has(key)) return nullptr;
    const Json& v = value_.at(std::string(key));
    if (!v.is_array()) schema_error(child(key), "expected an array");
    return &v;
  }

  std::vector<std::string> string_list(std::string_view key) const {
    std::vector<std::string> out;
    const Json* arr = optional_array(key);
    if (arr == nullptr) return out;
    for (std::size_t i = 0; i < arr->size(); ++i) {
      const Json& item = (*arr)[i];
      if (!item.is_string()) schema_error(child(key) + "[" + std::to_string(i) + "]", "expected a string");
      out.push_back(item.get<std::string>());
    }
    return out;
  }

  std::string child(std::string_view key) const {
    return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
  }

  const std::string& path() const { return path_; }

 private:
  const Json& value_;
  std::string path_;
};

}  // namespace rstsum::detail
