#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gp/distance.hpp"
#include "gp/graph.hpp"
#include "gp/position.hpp"

namespace gp {

// Partition of V(G) relative to an edge uv: vertices strictly closer to u,
// strictly closer to v, and the equidistant ties.
struct EdgeSides {
    VertexSet w_uv;
    VertexSet w_vu;
    VertexSet tie;
};

EdgeSides sidedness(const Graph& g, EdgeRef e);

// For all pairs on a common side of e (including ties): distances survive the
// deletion unchanged and no host geodesic between them uses e.
bool check_geodesic_preservation(const Graph& g, EdgeRef e);

// r must be a general position set of G - x, x not in r. R2 collects the
// members lying strictly inside some member-to-x interval; R1 is the rest.
// Both returned sets are verified general position sets of G.
std::pair<VertexSet, VertexSet> split_gp_set_on_vertex_removal(const Graph& g, int x,
                                                               const VertexSet& r);

// x_set must be a general position set of G. Classifies by sidedness of e in
// G; X_u = closer-to-u plus ties, X_v = closer-to-v plus ties. Both returned
// sets are verified general position sets of G - e.
std::pair<VertexSet, VertexSet> split_gp_set_on_edge_removal(const Graph& g, EdgeRef e,
                                                             const VertexSet& x_set);

enum class Flag { holds, na, violated };
const char* flag_name(Flag f);

enum class ScanKind { vertices, edges };

struct RemovalRecord {
    std::string element; // vertex label, or "u-v" for edges
    int gp_before = 0;
    int gp_after = 0;
    std::optional<int> diam_before; // nullopt = INF
    std::optional<int> diam_after;
    bool connected_after = false;
    std::optional<bool> in_some_gp_set; // vertex records only
    std::vector<std::pair<std::string, Flag>> theorem_flags;
};

// One record per element in label order; element evaluations may run
// concurrently. Vertex flags: thm_3_1, prop_3_3, prop_5_1, thm_5_2, cor_5_3.
// Edge flags: thm_6_2, thm_6_3, lemma_6_1.
std::vector<RemovalRecord> vertex_scan(const Graph& g, int threads = 1);
std::vector<RemovalRecord> edge_scan(const Graph& g, int threads = 1);

// Fixed column order: element, gp_before, gp_after, diam_before, diam_after,
// connected_after, in_some_gp_set, then one column per theorem flag.
std::string render_scan_csv(const std::vector<RemovalRecord>& records, ScanKind kind);
std::string render_scan_json(const std::vector<RemovalRecord>& records, ScanKind kind);

namespace detail {

// Shared per-element analysis; witness_after reports the gp witness of the
// deleted graph translated back to host labels (vertex analysis only).
RemovalRecord analyze_vertex(const Graph& g, const DistanceMatrix& dg, const GpCertificate& before,
                             int x, VertexSet* witness_after = nullptr);
RemovalRecord analyze_edge(const Graph& g, const DistanceMatrix& dg, const GpCertificate& before,
                           EdgeRef e);

} // namespace detail

} // namespace gp
