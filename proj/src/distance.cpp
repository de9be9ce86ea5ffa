#include "gp/distance.hpp"

#include <algorithm>

namespace gp {

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()), d_(size_t(n_) * size_t(n_), n_) {
    std::vector<int> queue(size_t(n_), 0);
    for (int s = 0; s < n_; ++s) {
        int* row = &d_[size_t(s) * size_t(n_)];
        row[s] = 0;
        queue[0] = s;
        size_t head = 0, tail = 1;
        while (head < tail) {
            int v = queue[head++];
            g.neighbors(v).for_each([&](int w) {
                if (row[w] == n_) {
                    row[w] = row[v] + 1;
                    queue[tail++] = w;
                }
            });
        }
    }
}

int DistanceMatrix::diameter() const {
    int best = 0;
    for (int x : d_) {
        if (x == n_) return n_;
        best = std::max(best, x);
    }
    return best;
}

int diameter(const Graph& g) { return DistanceMatrix(g).diameter(); }

bool is_on_geodesic(const DistanceMatrix& d, int u, int w, int v) {
    const int n = d.order();
    if (u < 0 || u >= n || v < 0 || v >= n || w < 0 || w >= n)
        fail(errc::invalid_argument, "vertex label out of range");
    if (u == v || u == w || w == v) return false;
    const int uv = d.at(u, v), uw = d.at(u, w), wv = d.at(w, v);
    if (!d.finite(uv) || !d.finite(uw) || !d.finite(wv)) return false;
    return uw + wv == uv;
}

} // namespace gp
