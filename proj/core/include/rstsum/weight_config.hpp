#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace rstsum {

/// Tunables of the weighting pass. `base_value` is what the first inserted
/// unit receives; each coefficient scales the weight a nucleus passes on to
/// a satellite over an edge of that relation type.
struct WeightConfig {
  double base_value = 1.0;
  double nucleus_increment = 1.0;
  std::map<std::string, double, std::less<>> coefficients = {
      {"Cause", 0.7},
      {"Contrast", 0.6},
      {"Elaboration", 0.5},
  };
  std::optional<double> default_coefficient = 0.5;

  /// Throws ConfigError when `rel_type` is unknown and there is no default.
  double coefficient_for(std::string_view rel_type) const;

  /// Throws ConfigError unless base_value, nucleus_increment > 0 and every
  /// coefficient lies in (0, 1].
  void validate() const;

  friend bool operator==(const WeightConfig&, const WeightConfig&) = default;
};

/// Reads {"base_value","nucleus_increment","coefficients","default_coefficient"}.
/// Every field is optional; `"default_coefficient": null` removes the default.
/// Listed coefficients replace the built-in table entry for that type only.
WeightConfig parse_weight_config(std::string_view text);

}  // namespace rstsum
