#pragma once

#include <cstddef>
#include <string_view>

namespace rstsum::testing {

struct DotCounts {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t dashed_edges = 0;
};

/// Recursive-descent check of the DOT subset a graph export needs: a strict
/// or plain (di)graph with node, edge and attribute statements, quoted or
/// bare ids, and attribute lists. Throws std::runtime_error on anything the
/// grammar rejects.
DotCounts check_dot(std::string_view text);

}  // namespace rstsum::testing
