#pragma once

#include <string>

#include "jramsey/graph.hpp"

namespace jramsey {

// Single-byte-size graph6 (order <= 62). Bits cover the upper triangle
// column-wise: (0,1),(0,2),(1,2),(0,3),..., six per byte, MSB first.
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

// graph6 when the order permits, otherwise an explicit edge-list string.
std::string describe_graph(const Graph& g);

}  // namespace jramsey
