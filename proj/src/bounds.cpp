#include "gp/bounds.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>

#include "gp/position.hpp"

namespace gp {

bool is_isometric_subgraph(const Graph& g, const VertexSet& part) {
    if (part.universe() != g.order()) fail(errc::invalid_argument, "vertex set universe mismatch");
    if (part.empty()) fail(errc::invalid_argument, "isometric check needs a nonempty part");
    const auto sub = induced_subgraph(g, part);
    DistanceMatrix host(g);
    DistanceMatrix local(sub.graph);
    const int k = sub.graph.order();
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const int dh = host.at(sub.to_host[size_t(i)], sub.to_host[size_t(j)]);
            const int dl = local.at(i, j);
            const bool same = local.finite(dl) ? (host.finite(dh) && dh == dl) : !host.finite(dh);
            if (!same) return false;
        }
    return true;
}

int isometric_cover_bound(const Graph& g, const CoverSpec& cover) {
    const int n = g.order();
    VertexSet covered(n);
    for (const VertexSet& part : cover.parts) {
        if (part.universe() != n) fail(errc::invalid_argument, "cover part universe mismatch");
        covered |= part;
    }
    if (!(covered == VertexSet::full(n))) {
        const VertexSet missing = VertexSet::full(n).minus(covered);
        fail(errc::invalid_argument,
             "cover misses " + std::to_string(missing.count()) + " vertices, first " +
                 std::to_string(missing.first()));
    }
    DistanceMatrix host(g);
    int bound = 0;
    for (size_t idx = 0; idx < cover.parts.size(); ++idx) {
        const auto sub = induced_subgraph(g, cover.parts[idx]);
        DistanceMatrix local(sub.graph);
        const int k = sub.graph.order();
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (local.at(i, j) != host.at(sub.to_host[size_t(i)], sub.to_host[size_t(j)]) ||
                    !local.finite(local.at(i, j)))
                    fail(errc::invalid_argument,
                         "cover part " + std::to_string(idx) + " is not isometric at pair (" +
                             std::to_string(sub.to_host[size_t(i)]) + ", " +
                             std::to_string(sub.to_host[size_t(j)]) + ")");
        bound += gp_number(sub.graph).value;
    }
    return bound;
}

int verify_isometric_path_cover(const Graph& g, const PathCover& pc) {
    const int n = g.order();
    DistanceMatrix d(g);
    VertexSet covered(n);
    for (size_t idx = 0; idx < pc.paths.size(); ++idx) {
        const auto& path = pc.paths[idx];
        if (path.empty())
            fail(errc::invalid_argument, "path " + std::to_string(idx) + " is empty");
        VertexSet seen(n);
        for (int v : path) {
            g.check_vertex(v);
            if (seen.test(v))
                fail(errc::invalid_argument,
                     "path " + std::to_string(idx) + " repeats vertex " + std::to_string(v));
            seen.set(v);
        }
        for (size_t i = 0; i + 1 < path.size(); ++i)
            if (!g.has_edge(path[i], path[i + 1]))
                fail(errc::invalid_argument,
                     "path " + std::to_string(idx) + " has non-adjacent step (" +
                         std::to_string(path[i]) + ", " + std::to_string(path[i + 1]) + ")");
        if (d.at(path.front(), path.back()) != int(path.size()) - 1)
            fail(errc::invalid_argument,
                 "path " + std::to_string(idx) + " is not a geodesic: length " +
                     std::to_string(path.size() - 1) + ", distance " +
                     std::to_string(d.at(path.front(), path.back())));
        covered |= seen;
    }
    if (!(covered == VertexSet::full(n))) {
        const VertexSet missing = VertexSet::full(n).minus(covered);
        std::string verts;
        missing.for_each([&](int v) { verts += " " + std::to_string(v); });
        fail(errc::invalid_argument, "path cover misses vertices:" + verts);
    }
    return int(pc.paths.size());
}

namespace {

// All distinct geodesic vertex sets as bit masks (order <= 10, so a 64-bit
// mask suffices), including single-vertex paths.
std::vector<uint64_t> geodesic_vertex_sets(const Graph& g, const DistanceMatrix& d) {
    const int n = g.order();
    std::unordered_set<uint64_t> sets;
    for (int v = 0; v < n; ++v) sets.insert(uint64_t{1} << v);
    long enumerated = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!d.finite(d.at(u, v))) continue;
            // DFS down the shortest-path DAG from u towards v; stack frames
            // hold (vertex, next neighbor label to try).
            uint64_t mask = uint64_t{1} << u;
            std::vector<std::pair<int, int>> stack{{u, 0}};
            while (!stack.empty()) {
                auto& [cur, next] = stack.back();
                if (cur == v) {
                    if (++enumerated > kIpGeodesicCap)
                        fail(errc::cap_exceeded, "geodesic enumeration cap exceeded");
                    sets.insert(mask);
                    mask &= ~(uint64_t{1} << cur);
                    stack.pop_back();
                    continue;
                }
                int chosen = -1;
                for (int w = next; w < n; ++w) {
                    if (g.has_edge(cur, w) && d.at(u, w) == d.at(u, cur) + 1 &&
                        d.at(w, v) == d.at(cur, v) - 1) {
                        chosen = w;
                        break;
                    }
                }
                if (chosen < 0) {
                    mask &= ~(uint64_t{1} << cur);
                    stack.pop_back();
                    continue;
                }
                next = chosen + 1;
                mask |= uint64_t{1} << chosen;
                stack.emplace_back(chosen, 0);
            }
        }
    }
    return {sets.begin(), sets.end()};
}

} // namespace

int isometric_path_number_exact(const Graph& g, int order_cap) {
    const int n = g.order();
    if (n > order_cap)
        fail(errc::cap_exceeded, "isometric path solver capped at " + std::to_string(order_cap) +
                                     " vertices, got " + std::to_string(n));
    DistanceMatrix d(g);
    const auto sets = geodesic_vertex_sets(g, d);

    // Exact minimum set cover over vertex subsets.
    const uint64_t full = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    std::vector<int> best(size_t(full) + 1, n + 1);
    best[0] = 0;
    for (uint64_t mask = 0; mask < full; ++mask) {
        if (best[size_t(mask)] > n) continue;
        // branch on the lowest uncovered vertex
        const int v = std::countr_zero(~mask);
        for (uint64_t s : sets) {
            if (!(s >> v & 1)) continue;
            const uint64_t covered = mask | s;
            best[size_t(covered)] = std::min(best[size_t(covered)], best[size_t(mask)] + 1);
        }
    }
    return best[size_t(full)];
}

} // namespace gp
