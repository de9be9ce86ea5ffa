#pragma once

#include <vector>

#include "gp/distance.hpp"
#include "gp/graph.hpp"

namespace gp {

// Cover of V(G) by (possibly overlapping) vertex sets, each inducing an
// isometric subgraph. Parts name induced subgraphs of the host.
struct CoverSpec {
    std::vector<VertexSet> parts;
};

// Cover of V(G) by explicit vertex sequences, each a geodesic of the host.
struct PathCover {
    std::vector<std::vector<int>> paths;
};

bool is_isometric_subgraph(const Graph& g, const VertexSet& part);

// Validates the cover (union = V, every part isometric; errors identify the
// offending part) and returns the sum of the exact gp numbers of the parts,
// an upper bound on gp(G).
int isometric_cover_bound(const Graph& g, const CoverSpec& cover);

// Validates that every sequence is a geodesic of g and that the sequences
// cover V(G); returns the number of paths. Establishes ip(G) <= count and
// hence gp(G) <= 2 * count.
int verify_isometric_path_cover(const Graph& g, const PathCover& pc);

inline constexpr int kIpOrderCap = 10;
inline constexpr long kIpGeodesicCap = 1000000;

// Exact isometric-path number by minimum set cover over all geodesic vertex
// sets, enumerated per ordered pair through the shortest-path DAG. The
// enumeration cap turns pathological blow-ups into a reported error.
int isometric_path_number_exact(const Graph& g, int order_cap = kIpOrderCap);

} // namespace gp
