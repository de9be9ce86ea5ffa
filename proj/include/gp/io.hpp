#pragma once

#include <string>
#include <string_view>

#include "gp/graph.hpp"

namespace gp {

// graph6 text codec. Encoding is canonical: shortest length form, upper
// adjacency triangle packed column-major into 6-bit chunks offset by 63.
// The decoder accepts the optional ">>graph6<<" header and the long length
// form up to the documented order cap.
inline constexpr int kG6DecodeOrderCap = 4096;

std::string g6_encode(const Graph& g);
Graph g6_decode(std::string_view text);

// Edge-list text format: header line "n m", then m lines "u v" (0-indexed).
std::string edge_list_encode(const Graph& g);
Graph edge_list_parse(std::string_view text);

} // namespace gp
