#pragma once

#include <map>
#include <string>

#include "rstsum/document.hpp"
#include "rstsum/weight_config.hpp"

namespace rstsum::testing {

/// Reference evaluation of the weighting rules straight off the document,
/// sharing no code with the library's graph or weighting passes: recursive
/// depth-first visit to decide each unit's rule, then memoized recursive
/// evaluation. Returns raw weights for every reached unit, ECUs included.
std::map<std::string, double> oracle_weights(const DocumentSpec& doc, const WeightConfig& config);

}  // namespace rstsum::testing
