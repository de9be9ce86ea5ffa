#include "gp/position.hpp"

#include <algorithm>
#include <string>

namespace gp {

namespace {

// interior(u, v) = { w : w distinct from u,v and d(u,w) + d(w,v) = d(u,v) },
// empty whenever d(u,v) is not finite. Symmetric in u and v.
struct BetweennessTable {
    int n;
    std::vector<VertexSet> interior;

    explicit BetweennessTable(const DistanceMatrix& d)
        : n(d.order()), interior(size_t(n) * size_t(n), VertexSet(n)) {
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                const int uv = d.at(u, v);
                if (!d.finite(uv)) continue;
                VertexSet& set = interior[size_t(u) * size_t(n) + size_t(v)];
                for (int w = 0; w < n; ++w) {
                    if (w == u || w == v) continue;
                    const int uw = d.at(u, w), wv = d.at(w, v);
                    if (d.finite(uw) && d.finite(wv) && uw + wv == uv) set.set(w);
                }
                interior[size_t(v) * size_t(n) + size_t(u)] = set;
            }
        }
    }

    const VertexSet& at(int u, int v) const { return interior[size_t(u) * size_t(n) + size_t(v)]; }
};

// Depth-first extension in ascending vertex order. Updating the incumbent
// only on strict improvement makes the first maximum set found — and hence
// the reported witness — the lexicographically smallest one; the initial
// bound is therefore seeded one below the best known feasible size.
class GpSearch {
public:
    GpSearch(const DistanceMatrix& d, const Graph& g) : n_(d.order()), tbl_(d), graph_(g) {}

    GpCertificate run(const VertexSet& base) {
        members_ = base.to_vector();
        cur_ = base;
        forbidden_ = VertexSet(n_);
        for (size_t i = 0; i < members_.size(); ++i)
            for (size_t j = i + 1; j < members_.size(); ++j)
                forbidden_ |= tbl_.at(members_[i], members_[j]);

        best_ = seed_bound(base) - 1;
        witness_ = VertexSet(n_);
        dfs(0);
        return GpCertificate{best_, witness_};
    }

private:
    int greedy_extension(const VertexSet& base) const {
        VertexSet cur = base;
        std::vector<int> members = base.to_vector();
        VertexSet forbidden(n_);
        for (size_t i = 0; i < members.size(); ++i)
            for (size_t j = i + 1; j < members.size(); ++j)
                forbidden |= tbl_.at(members[i], members[j]);
        for (int w = 0; w < n_; ++w) {
            if (cur.test(w) || forbidden.test(w)) continue;
            bool ok = true;
            for (int v : members)
                if (cur.intersects(tbl_.at(w, v))) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (int v : members) forbidden |= tbl_.at(v, w);
            members.push_back(w);
            cur.set(w);
        }
        return int(members.size());
    }

    int greedy_clique() const {
        VertexSet kept(n_);
        int size = 0;
        for (int v = 0; v < n_; ++v)
            if (kept.minus(graph_.neighbors(v)).empty()) {
                kept.set(v);
                ++size;
            }
        return size;
    }

    int seed_bound(const VertexSet& base) const {
        int seed = greedy_extension(base);
        if (base.empty()) seed = std::max(seed, greedy_clique());
        return seed;
    }

    bool compatible(int w) const {
        for (int v : members_)
            if (cur_.intersects(tbl_.at(w, v))) return false;
        return true;
    }

    void dfs(int start) {
        const int size = int(members_.size());
        if (size > best_) {
            best_ = size;
            witness_ = cur_;
        }
        std::vector<int> cand;
        cand.reserve(size_t(n_ - start));
        for (int w = start; w < n_; ++w) {
            if (cur_.test(w) || forbidden_.test(w)) continue;
            if (compatible(w)) cand.push_back(w);
        }
        if (size + int(cand.size()) <= best_) return;
        for (size_t i = 0; i < cand.size(); ++i) {
            if (size + int(cand.size() - i) <= best_) return;
            const int w = cand[i];
            VertexSet saved = forbidden_;
            for (int u : members_) forbidden_ |= tbl_.at(u, w);
            members_.push_back(w);
            cur_.set(w);
            dfs(w + 1);
            members_.pop_back();
            cur_.reset(w);
            forbidden_ = std::move(saved);
        }
    }

    int n_;
    BetweennessTable tbl_;
    const Graph& graph_;
    std::vector<int> members_;
    VertexSet cur_;
    VertexSet forbidden_;
    int best_ = 0;
    VertexSet witness_;
};

bool triple_free(const DistanceMatrix& d, const std::vector<int>& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            for (size_t k = 0; k < s.size(); ++k) {
                if (k == i || k == j) continue;
                if (is_on_geodesic(d, s[i], s[k], s[j])) return false;
            }
    return true;
}

} // namespace

bool is_general_position(const DistanceMatrix& d, const VertexSet& s) {
    if (s.universe() != d.order()) fail(errc::invalid_argument, "vertex set universe mismatch");
    return triple_free(d, s.to_vector());
}

std::pair<bool, PartitionReport> check_characterization(const Graph& g, const DistanceMatrix& d,
                                                        const VertexSet& s) {
    if (!g.is_connected())
        fail(errc::invalid_argument, "characterization check requires a connected graph");
    if (s.universe() != g.order()) fail(errc::invalid_argument, "vertex set universe mismatch");

    PartitionReport rep;
    const int n = g.order();

    // Components of G[S].
    VertexSet seen(n);
    s.for_each([&](int v) {
        if (seen.test(v)) return;
        VertexSet block(n);
        std::vector<int> stack{v};
        seen.set(v);
        block.set(v);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            (g.neighbors(x) & s).for_each([&](int w) {
                if (!seen.test(w)) {
                    seen.set(w);
                    block.set(w);
                    stack.push_back(w);
                }
            });
        }
        rep.blocks.push_back(std::move(block));
    });

    rep.blocks_complete = true;
    for (const VertexSet& block : rep.blocks) {
        const auto verts = block.to_vector();
        for (size_t i = 0; i < verts.size() && rep.blocks_complete; ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                if (!g.has_edge(verts[i], verts[j])) {
                    rep.blocks_complete = false;
                    break;
                }
    }

    const int t = int(rep.blocks.size());
    rep.block_distance.assign(size_t(t), std::vector<int>(size_t(t), 0));
    rep.distance_constant = true;
    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            int constant = -2;
            rep.blocks[size_t(i)].for_each([&](int x) {
                rep.blocks[size_t(j)].for_each([&](int y) {
                    const int dist = d.at(x, y);
                    if (constant == -2)
                        constant = dist;
                    else if (constant != dist)
                        constant = -1;
                });
            });
            if (constant == -1) rep.distance_constant = false;
            rep.block_distance[size_t(i)][size_t(j)] = constant;
            rep.block_distance[size_t(j)][size_t(i)] = constant;
        }
    }

    rep.in_transitive = rep.distance_constant;
    if (rep.distance_constant) {
        for (int i = 0; i < t && rep.in_transitive; ++i)
            for (int j = 0; j < t && rep.in_transitive; ++j) {
                if (j == i) continue;
                for (int k = 0; k < t; ++k) {
                    if (k == i || k == j) continue;
                    if (rep.block_distance[size_t(i)][size_t(k)] ==
                        rep.block_distance[size_t(i)][size_t(j)] +
                            rep.block_distance[size_t(j)][size_t(k)]) {
                        rep.in_transitive = false;
                        break;
                    }
                }
            }
    }

    const bool ok = rep.blocks_complete && rep.distance_constant && rep.in_transitive;
    return {ok, std::move(rep)};
}

GpCertificate gp_number(const Graph& g) {
    const auto comps = connected_components(g);
    if (comps.size() == 1) {
        DistanceMatrix d(g);
        return GpSearch(d, g).run(VertexSet(g.order()));
    }
    GpCertificate total{0, VertexSet(g.order())};
    for (const VertexSet& comp : comps) {
        auto sub = induced_subgraph(g, comp);
        DistanceMatrix d(sub.graph);
        GpCertificate cert = GpSearch(d, sub.graph).run(VertexSet(sub.graph.order()));
        total.value += cert.value;
        cert.witness.for_each([&](int v) { total.witness.set(sub.to_host[size_t(v)]); });
    }
    return total;
}

std::optional<GpCertificate> gp_number_forcing(const Graph& g, const VertexSet& required) {
    if (required.universe() != g.order())
        fail(errc::invalid_argument, "vertex set universe mismatch");
    DistanceMatrix d(g);
    if (!is_general_position(d, required)) return std::nullopt;
    return GpSearch(d, g).run(required);
}

bool in_some_gp_set(const Graph& g, int x) {
    g.check_vertex(x);
    const GpCertificate whole = gp_number(g);
    const auto forced = gp_number_forcing(g, VertexSet::of(g.order(), {x}));
    return forced && forced->value == whole.value;
}

GpCertificate brute_force_gp(const Graph& g, int order_cap) {
    const int n = g.order();
    if (n > order_cap)
        fail(errc::cap_exceeded, "brute-force oracle capped at " + std::to_string(order_cap) +
                                     " vertices, got " + std::to_string(n));
    DistanceMatrix d(g);
    std::vector<int> comb;
    for (int k = n; k >= 1; --k) {
        comb.resize(size_t(k));
        for (int i = 0; i < k; ++i) comb[size_t(i)] = i;
        for (;;) {
            if (triple_free(d, comb)) {
                VertexSet witness(n);
                for (int v : comb) witness.set(v);
                return GpCertificate{k, witness};
            }
            // next k-combination in lexicographic order
            int i = k - 1;
            while (i >= 0 && comb[size_t(i)] == n - k + i) --i;
            if (i < 0) break;
            ++comb[size_t(i)];
            for (int j = i + 1; j < k; ++j) comb[size_t(j)] = comb[size_t(j - 1)] + 1;
        }
    }
    return GpCertificate{1, VertexSet::of(n, {0})}; // unreachable: singletons always pass
}

namespace {

class IndependenceSearch {
public:
    explicit IndependenceSearch(const Graph& g) : g_(g), n_(g.order()) {}

    std::pair<int, VertexSet> run() {
        int greedy = 0;
        {
            VertexSet banned(n_);
            for (int v = 0; v < n_; ++v)
                if (!banned.test(v)) {
                    ++greedy;
                    banned.set(v);
                    banned |= g_.neighbors(v);
                }
        }
        best_ = greedy - 1;
        witness_ = VertexSet(n_);
        cur_ = VertexSet(n_);
        dfs(VertexSet::full(n_), 0, 0);
        return {best_, witness_};
    }

private:
    void dfs(const VertexSet& avail, int size, int start) {
        if (size > best_) {
            best_ = size;
            witness_ = cur_;
        }
        std::vector<int> cand;
        avail.for_each([&](int v) {
            if (v >= start) cand.push_back(v);
        });
        if (size + int(cand.size()) <= best_) return;
        for (size_t i = 0; i < cand.size(); ++i) {
            if (size + int(cand.size() - i) <= best_) return;
            const int w = cand[i];
            VertexSet next = avail.minus(g_.neighbors(w));
            next.reset(w);
            cur_.set(w);
            dfs(next, size + 1, w + 1);
            cur_.reset(w);
        }
    }

    const Graph& g_;
    int n_;
    int best_ = 0;
    VertexSet cur_;
    VertexSet witness_;
};

} // namespace

std::pair<int, VertexSet> independence_number(const Graph& g, int order_cap) {
    if (g.order() > order_cap)
        fail(errc::cap_exceeded, "independence solver capped at " + std::to_string(order_cap) +
                                     " vertices, got " + std::to_string(g.order()));
    return IndependenceSearch(g).run();
}

int leaves_count(const Graph& g) {
    int leaves = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) ++leaves;
    return leaves;
}

} // namespace gp
