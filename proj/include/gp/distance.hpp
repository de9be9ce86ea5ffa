#pragma once

#include <vector>

#include "gp/graph.hpp"

namespace gp {

// All-pairs shortest-path distances in hop units, computed by BFS from every
// vertex. Unreachable pairs carry the sentinel value n: no finite distance in
// an n-vertex graph can reach n, so ordinary comparisons need no special case.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g);

    int order() const { return n_; }
    int inf() const { return n_; }
    bool finite(int d) const { return d < n_; }

    int at(int u, int v) const { return d_[size_t(u) * size_t(n_) + size_t(v)]; }

    // Maximum distance over all pairs; inf() when the graph is disconnected.
    int diameter() const;

private:
    int n_;
    std::vector<int> d_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) { return DistanceMatrix(g); }

int diameter(const Graph& g);

// True iff w lies strictly between u and v on some shortest u,v-path:
// all three distances finite and d(u,w) + d(w,v) = d(u,v). Non-distinct
// arguments never qualify.
bool is_on_geodesic(const DistanceMatrix& d, int u, int w, int v);

} // namespace gp
