#pragma once

#include <utility>
#include <vector>

#include "gp/bitset.hpp"
#include "gp/common.hpp"

namespace gp {

// Undirected edge with normalized endpoint order u < v.
struct EdgeRef {
    int u = 0;
    int v = 0;

    static EdgeRef make(int a, int b) {
        if (a == b) fail(errc::invalid_argument, "edge endpoints must differ");
        return a < b ? EdgeRef{a, b} : EdgeRef{b, a};
    }

    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

// Immutable simple undirected graph on contiguous labels 0..n-1 with dense
// bit-row adjacency. Construction validates labels, rejects self-loops and
// collapses duplicate edge pairs.
class Graph {
public:
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const { return m_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[size_t(u)].test(v);
    }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[size_t(v)];
    }

    int degree(int v) const { return neighbors(v).count(); }

    std::vector<EdgeRef> edges() const; // ascending (u, v), u < v

    bool is_connected() const;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) fail(errc::invalid_argument, "vertex label out of range");
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 1;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Vertex deletion relabels the survivors contiguously; relabel maps old
// labels to new ones with -1 marking the deleted vertex.
struct VertexDeletion {
    Graph graph;
    std::vector<int> relabel;
};

VertexDeletion delete_vertex(const Graph& g, int x);
Graph delete_edge(const Graph& g, EdgeRef e);

std::vector<VertexSet> connected_components(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_host; // new label -> host label, ascending
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& part);

} // namespace gp
