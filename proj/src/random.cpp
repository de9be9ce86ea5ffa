#include "gp/random.hpp"

namespace gp {

Graph random_connected_graph(int n, double p, uint64_t seed) {
    if (n < 1) fail(errc::invalid_argument, "sampler order must be at least 1");
    if (!(p > 0.0) || p > 1.0) fail(errc::invalid_argument, "edge probability must be in (0, 1]");
    SplitMix64 rng(seed);
    constexpr int kAttempts = 1000;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_unit() < p) edges.emplace_back(u, v);
        Graph g(n, edges);
        if (g.is_connected()) return g;
    }
    fail(errc::cap_exceeded, "rejection cap exceeded: edge probability too small to stay connected");
}

Graph random_tree(int n, uint64_t seed) {
    if (n < 1) fail(errc::invalid_argument, "sampler order must be at least 1");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{0, 1}});
    SplitMix64 rng(seed);
    std::vector<int> code(size_t(n - 2));
    for (auto& x : code) x = int(rng.next_below(uint32_t(n)));

    std::vector<int> degree(size_t(n), 1);
    for (int x : code) ++degree[size_t(x)];
    std::vector<bool> used(size_t(n), false);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(size_t(n - 1));
    for (int x : code) {
        for (int v = 0; v < n; ++v) {
            if (!used[size_t(v)] && degree[size_t(v)] == 1) {
                edges.emplace_back(v, x);
                used[size_t(v)] = true;
                --degree[size_t(x)];
                break;
            }
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (!used[size_t(v)]) (a < 0 ? a : b) = v;
    edges.emplace_back(a, b);
    return Graph(n, edges);
}

} // namespace gp
