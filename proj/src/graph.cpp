#include "gp/graph.hpp"

#include <string>

namespace gp {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 1) fail(errc::invalid_argument, "graph order must be at least 1");
    adj_.assign(size_t(n), VertexSet(n));
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            fail(errc::invalid_argument,
                 "edge label out of range: (" + std::to_string(a) + ", " + std::to_string(b) + ")");
        if (a == b) fail(errc::invalid_argument, "self-loop rejected at vertex " + std::to_string(a));
        if (!adj_[size_t(a)].test(b)) {
            adj_[size_t(a)].set(b);
            adj_[size_t(b)].set(a);
            ++m_;
        }
    }
}

std::vector<EdgeRef> Graph::edges() const {
    std::vector<EdgeRef> out;
    out.reserve(size_t(m_));
    for (int u = 0; u < n_; ++u)
        adj_[size_t(u)].for_each([&](int v) {
            if (v > u) out.push_back(EdgeRef{u, v});
        });
    return out;
}

bool Graph::is_connected() const {
    VertexSet seen(n_);
    std::vector<int> stack{0};
    seen.set(0);
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        adj_[size_t(v)].for_each([&](int w) {
            if (!seen.test(w)) {
                seen.set(w);
                ++reached;
                stack.push_back(w);
            }
        });
    }
    return reached == n_;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) { return Graph(n, edges); }

VertexDeletion delete_vertex(const Graph& g, int x) {
    g.check_vertex(x);
    if (g.order() < 2) fail(errc::invalid_argument, "cannot delete the last vertex");
    const int n = g.order();
    std::vector<int> relabel(size_t(n), 0);
    for (int v = 0; v < n; ++v) relabel[size_t(v)] = v < x ? v : (v == x ? -1 : v - 1);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(size_t(g.size()));
    for (const EdgeRef& e : g.edges())
        if (e.u != x && e.v != x) edges.emplace_back(relabel[size_t(e.u)], relabel[size_t(e.v)]);
    return VertexDeletion{Graph(n - 1, edges), std::move(relabel)};
}

Graph delete_edge(const Graph& g, EdgeRef e) {
    if (!g.has_edge(e.u, e.v))
        fail(errc::invalid_argument,
             "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") not present");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(size_t(g.size()) - 1);
    for (const EdgeRef& f : g.edges())
        if (!(f == e)) edges.emplace_back(f.u, f.v);
    return Graph(g.order(), edges);
}

std::vector<VertexSet> connected_components(const Graph& g) {
    const int n = g.order();
    VertexSet seen(n);
    std::vector<VertexSet> comps;
    for (int s = 0; s < n; ++s) {
        if (seen.test(s)) continue;
        VertexSet comp(n);
        std::vector<int> stack{s};
        seen.set(s);
        comp.set(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            g.neighbors(v).for_each([&](int w) {
                if (!seen.test(w)) {
                    seen.set(w);
                    comp.set(w);
                    stack.push_back(w);
                }
            });
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& part) {
    if (part.universe() != g.order()) fail(errc::invalid_argument, "vertex set universe mismatch");
    if (part.empty()) fail(errc::invalid_argument, "induced subgraph needs a nonempty vertex set");
    std::vector<int> to_host = part.to_vector();
    std::vector<int> to_sub(size_t(g.order()), -1);
    for (size_t i = 0; i < to_host.size(); ++i) to_sub[size_t(to_host[i])] = int(i);
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < to_host.size(); ++i)
        g.neighbors(to_host[i]).for_each([&](int w) {
            if (w > to_host[i] && part.test(w)) edges.emplace_back(int(i), to_sub[size_t(w)]);
        });
    return InducedSubgraph{Graph(int(to_host.size()), edges), std::move(to_host)};
}

} // namespace gp
