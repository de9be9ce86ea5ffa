#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gp/distance.hpp"
#include "gp/graph.hpp"

namespace gp {

// Exact general position number together with a witness set of that size.
// Witnesses reported by the solvers are the lexicographically smallest
// maximum sets (as sorted vertex sequences).
struct GpCertificate {
    int value = 0;
    VertexSet witness;
};

// True iff no ordered triple (u, w, v) of distinct members of s has w on a
// shortest u,v-path. This triple formulation is the normative semantics; the
// structural characterization below is the independent second route.
bool is_general_position(const DistanceMatrix& d, const VertexSet& s);

// Structural description of a candidate set: components of G[S] as blocks,
// block-to-block distance constants (-1 marks a non-constant pair) and the
// in-transitivity of those constants.
struct PartitionReport {
    std::vector<VertexSet> blocks;
    std::vector<std::vector<int>> block_distance; // -1 = non-constant
    bool blocks_complete = false;
    bool distance_constant = false;
    bool in_transitive = false;
};

// Checks whether every component of G[S] is a complete subgraph whose blocks
// form an in-transitive, distance-constant partition of S. Connected hosts
// only.
std::pair<bool, PartitionReport> check_characterization(const Graph& g, const DistanceMatrix& d,
                                                        const VertexSet& s);

// Exact gp number by branch-and-bound over triple-free extensions in fixed
// vertex order. Disconnected inputs decompose by component (the constraint
// never binds across components), so the value is the component sum.
GpCertificate gp_number(const Graph& g);

// Maximum general position set among those containing `required`; nullopt
// when `required` itself is not in general position.
std::optional<GpCertificate> gp_number_forcing(const Graph& g, const VertexSet& required);

bool in_some_gp_set(const Graph& g, int x);

inline constexpr int kBruteForceOrderCap = 20;
inline constexpr int kIndependenceOrderCap = 40;

// Exhaustive descending-cardinality subset scan with the triple check only.
// Deliberately free of the solver's pruning so it can validate gp_number.
GpCertificate brute_force_gp(const Graph& g, int order_cap = kBruteForceOrderCap);

// Exact independence number with a lexicographically smallest maximum witness.
std::pair<int, VertexSet> independence_number(const Graph& g,
                                              int order_cap = kIndependenceOrderCap);

int leaves_count(const Graph& g);

} // namespace gp
