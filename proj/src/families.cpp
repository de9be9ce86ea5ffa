#include "gp/families.hpp"

#include <algorithm>

#include "gp/position.hpp"

namespace gp {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

void need_params(const FamilySpec& spec, size_t count) {
    if (spec.params.size() != count)
        fail(errc::invalid_argument, "family '" + spec.name + "' takes " + std::to_string(count) +
                                         " parameter(s), got " + std::to_string(spec.params.size()));
}

void require(bool ok, const std::string& what) {
    if (!ok) fail(errc::invalid_argument, what);
}

FamilyResult make_path(int n) {
    require(n >= 1, "path needs n >= 1");
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return {Graph(n, e), {}};
}

FamilyResult make_cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    EdgeList e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return {Graph(n, e), {}};
}

FamilyResult make_complete(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return {Graph(n, e), {}};
}

// Parts occupy consecutive label ranges in the given order.
FamilyResult make_complete_multipartite(const std::vector<int>& parts) {
    require(parts.size() >= 2, "complete multipartite needs at least 2 parts");
    int n = 0;
    std::vector<int> start;
    for (int p : parts) {
        require(p >= 1, "part sizes must be positive");
        start.push_back(n);
        n += p;
    }
    EdgeList e;
    for (size_t a = 0; a < parts.size(); ++a)
        for (size_t b = a + 1; b < parts.size(); ++b)
            for (int i = 0; i < parts[a]; ++i)
                for (int j = 0; j < parts[b]; ++j)
                    e.emplace_back(start[a] + i, start[b] + j);
    return {Graph(n, e), {}};
}

// Center 0; subdivision vertices 1..n; leaf n+i hangs off subdivision i.
FamilyResult make_star_subdivision(int n) {
    require(n >= 2, "star subdivision needs n >= 2");
    EdgeList e;
    for (int i = 1; i <= n; ++i) {
        e.emplace_back(0, i);
        e.emplace_back(i, n + i);
    }
    FamilyResult r{Graph(2 * n + 1, e), {}};
    r.landmarks.vertices["center"] = 0;
    return r;
}

// Path 0..n-1 plus a hub n joined to every path vertex. The landmark edge e
// joins the hub and the path end n-1.
FamilyResult make_fan(int n) {
    require(n >= 3, "fan needs n >= 3");
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    for (int i = 0; i < n; ++i) e.emplace_back(n, i);
    FamilyResult r{Graph(n + 1, e), {}};
    r.landmarks.vertices["hub"] = n;
    r.landmarks.vertices["path_end"] = n - 1;
    r.landmarks.edges["e"] = EdgeRef::make(n, n - 1);
    return r;
}

FamilyResult make_petersen() {
    EdgeList e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);       // outer cycle
        e.emplace_back(i, i + 5);             // spokes
        e.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
    }
    return {Graph(10, e), {}};
}

// Cartesian product of paths; vertex (i, j) has label i*m + j.
FamilyResult make_grid(int n, int m) {
    require(n >= 1 && m >= 1, "grid needs n, m >= 1");
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            if (j + 1 < m) e.emplace_back(i * m + j, i * m + j + 1);
            if (i + 1 < n) e.emplace_back(i * m + j, (i + 1) * m + j);
        }
    return {Graph(n * m, e), {}};
}

// Strong product of K_n and C_m; vertex (i, j) has label i*m + j. Both
// coordinates must be equal or adjacent, and not both equal; in K_n any two
// distinct coordinates are adjacent.
FamilyResult make_strong_kn_cm(int n, int m) {
    require(n >= 1, "strong product needs n >= 1");
    require(m >= 3, "strong product needs a cycle, m >= 3");
    EdgeList e;
    const auto cyc_adj = [m](int a, int b) {
        int diff = (a - b + m) % m;
        return diff == 1 || diff == m - 1;
    };
    const int order = n * m;
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b) {
            const int ja = a % m, jb = b % m;
            if (ja == jb || cyc_adj(ja, jb)) e.emplace_back(a, b);
        }
    return {Graph(order, e), {}};
}

// Complete graphs glued at one shared cut vertex 0; clique i contributes
// n_i - 1 private vertices.
FamilyResult make_clique_amalgam(const std::vector<int>& sizes) {
    require(sizes.size() >= 3, "clique amalgam needs k >= 3 cliques");
    EdgeList e;
    int next = 1;
    for (int s : sizes) {
        require(s >= 2, "clique sizes must be at least 2");
        const int lo = next, hi = next + s - 1; // private labels [lo, hi)
        for (int i = lo; i < hi; ++i) {
            e.emplace_back(0, i);
            for (int j = i + 1; j < hi; ++j) e.emplace_back(i, j);
        }
        next = hi;
    }
    FamilyResult r{Graph(next, e), {}};
    r.landmarks.vertices["cut"] = 0;
    return r;
}

// y_1..y_2n = 0..2n-1 induce K_2n; x = 2n is adjacent to y_1..y_n and all z;
// x' = 2n+1 is adjacent to y_{n+1} and all z; z_1..z_n = 2n+2..3n+1 are
// independent.
FamilyResult make_Hn(int n) {
    require(n >= 3, "Hn needs n >= 3");
    const int x = 2 * n, xp = 2 * n + 1, z0 = 2 * n + 2;
    EdgeList e;
    for (int i = 0; i < 2 * n; ++i)
        for (int j = i + 1; j < 2 * n; ++j) e.emplace_back(i, j);
    for (int i = 0; i < n; ++i) e.emplace_back(x, i);
    e.emplace_back(xp, n);
    for (int i = 0; i < n; ++i) {
        e.emplace_back(x, z0 + i);
        e.emplace_back(xp, z0 + i);
    }
    FamilyResult r{Graph(3 * n + 2, e), {}};
    r.landmarks.vertices["x"] = x;
    r.landmarks.vertices["x_prime"] = xp;
    r.landmarks.vertices["y1"] = 0;
    r.landmarks.vertices["z1"] = z0;
    return r;
}

// x_1..x_k = 0..k-1; y_1..y_k = k..2k-1; w = 2k adjacent to all x and y;
// z_1..z_{k+1} = 2k+1..3k+1 induce K_{k+1}; z_2 ~ y_2..y_k; z_1 ~ y_1.
FamilyResult make_Gk(int k) {
    require(k >= 2, "Gk needs k >= 2");
    const int w = 2 * k, z1 = 2 * k + 1, z2 = 2 * k + 2;
    EdgeList e;
    for (int i = 0; i < 2 * k; ++i) e.emplace_back(w, i);
    for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) e.emplace_back(z1 + i, z1 + j);
    for (int i = 1; i < k; ++i) e.emplace_back(z2, k + i); // y_2..y_k
    e.emplace_back(z1, k);                                 // y_1
    FamilyResult r{Graph(3 * k + 2, e), {}};
    r.landmarks.vertices["w"] = w;
    r.landmarks.vertices["z1"] = z1;
    r.landmarks.vertices["z2"] = z2;
    return r;
}

// Shared skeleton of the two edge-removal gadget rings: four K_{2,k} gadgets
// (hubs a_g = g*(k+2), b_g = a_g+1, k middles in between), hub-to-hub
// connectors b0a1, b1a2 (the landmark e), b2a3, and an 8-edge path
// b3-p1-...-p7-a0 closing the ring. `hubbed` selects the gadgets that get
// the extra hub-hub edge.
FamilyResult make_gadget_ring(int k, std::initializer_list<int> hubbed, bool label_f) {
    require(k >= 3, "gadget ring needs k >= 3");
    const auto a = [k](int g) { return g * (k + 2); };
    const auto b = [k](int g) { return g * (k + 2) + 1; };
    EdgeList e;
    for (int g = 0; g < 4; ++g)
        for (int t = 0; t < k; ++t) {
            e.emplace_back(a(g), a(g) + 2 + t);
            e.emplace_back(b(g), a(g) + 2 + t);
        }
    for (int g : hubbed) e.emplace_back(a(g), b(g));
    e.emplace_back(b(0), a(1));
    e.emplace_back(b(1), a(2));
    e.emplace_back(b(2), a(3));
    const int p1 = 4 * k + 8;
    e.emplace_back(b(3), p1);
    for (int i = 0; i < 6; ++i) e.emplace_back(p1 + i, p1 + i + 1);
    e.emplace_back(p1 + 6, a(0));
    FamilyResult r{Graph(4 * k + 15, e), {}};
    for (int g = 0; g < 4; ++g) {
        r.landmarks.vertices["a" + std::to_string(g)] = a(g);
        r.landmarks.vertices["b" + std::to_string(g)] = b(g);
    }
    r.landmarks.edges["e"] = EdgeRef::make(b(1), a(2));
    if (label_f) {
        r.landmarks.edges["f"] = EdgeRef::make(a(1), b(1));
        r.landmarks.edges["f_prime"] = EdgeRef::make(a(2), b(2));
    }
    return r;
}

// K_m on 0..m-1 with x = 0, y = 1; x' = m, y' = m+1; extra edges x'y', x'x,
// y'y, x'y. The landmark e is xx'.
FamilyResult make_Gm_gadget(int m) {
    require(m >= 3, "Gm gadget needs m >= 3");
    EdgeList e;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) e.emplace_back(i, j);
    e.emplace_back(m, m + 1);
    e.emplace_back(m, 0);
    e.emplace_back(m + 1, 1);
    e.emplace_back(m, 1);
    FamilyResult r{Graph(m + 2, e), {}};
    r.landmarks.vertices["x"] = 0;
    r.landmarks.vertices["y"] = 1;
    r.landmarks.vertices["x_prime"] = m;
    r.landmarks.vertices["y_prime"] = m + 1;
    r.landmarks.edges["e"] = EdgeRef::make(0, m);
    return r;
}

// Copy of the base graph plus an apex adjacent to exactly the members of the
// lexicographically first maximum independent set of the base.
FamilyResult make_cone_over_mis(const Graph& base) {
    const auto [alpha, mis] = independence_number(base);
    (void)alpha;
    const int apex = base.order();
    EdgeList e;
    for (const EdgeRef& f : base.edges()) e.emplace_back(f.u, f.v);
    mis.for_each([&](int v) { e.emplace_back(apex, v); });
    FamilyResult r{Graph(base.order() + 1, e), {}};
    r.landmarks.vertices["apex"] = apex;
    return r;
}

} // namespace

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = {
        "path",        "cycle",           "complete",      "complete_bipartite",
        "complete_multipartite", "star_subdivision", "fan", "petersen",
        "grid",        "strong_kn_cm",    "clique_amalgam", "Hn",
        "Gk",          "Gk_prime",        "Gk_dprime",     "Gm_gadget",
        "cone_over_mis"};
    return names;
}

FamilyResult generate(const FamilySpec& spec) {
    const std::string& f = spec.name;
    if (f != "cone_over_mis" && spec.base)
        fail(errc::invalid_argument, "only cone_over_mis takes a base graph");
    if (f == "path") {
        need_params(spec, 1);
        return make_path(spec.params[0]);
    }
    if (f == "cycle") {
        need_params(spec, 1);
        return make_cycle(spec.params[0]);
    }
    if (f == "complete") {
        need_params(spec, 1);
        return make_complete(spec.params[0]);
    }
    if (f == "complete_bipartite") {
        need_params(spec, 2);
        return make_complete_multipartite({spec.params[0], spec.params[1]});
    }
    if (f == "complete_multipartite") {
        if (spec.params.size() < 2)
            fail(errc::invalid_argument, "complete multipartite needs at least 2 part sizes");
        return make_complete_multipartite(spec.params);
    }
    if (f == "star_subdivision") {
        need_params(spec, 1);
        return make_star_subdivision(spec.params[0]);
    }
    if (f == "fan") {
        need_params(spec, 1);
        return make_fan(spec.params[0]);
    }
    if (f == "petersen") {
        need_params(spec, 0);
        return make_petersen();
    }
    if (f == "grid") {
        need_params(spec, 2);
        return make_grid(spec.params[0], spec.params[1]);
    }
    if (f == "strong_kn_cm") {
        need_params(spec, 2);
        return make_strong_kn_cm(spec.params[0], spec.params[1]);
    }
    if (f == "clique_amalgam") {
        if (spec.params.size() < 3)
            fail(errc::invalid_argument, "clique amalgam needs at least 3 clique sizes");
        return make_clique_amalgam(spec.params);
    }
    if (f == "Hn") {
        need_params(spec, 1);
        return make_Hn(spec.params[0]);
    }
    if (f == "Gk") {
        need_params(spec, 1);
        return make_Gk(spec.params[0]);
    }
    if (f == "Gk_prime") {
        need_params(spec, 1);
        return make_gadget_ring(spec.params[0], {1, 2}, true);
    }
    if (f == "Gk_dprime") {
        need_params(spec, 1);
        return make_gadget_ring(spec.params[0], {0, 3}, false);
    }
    if (f == "Gm_gadget") {
        need_params(spec, 1);
        return make_Gm_gadget(spec.params[0]);
    }
    if (f == "cone_over_mis") {
        need_params(spec, 0);
        if (!spec.base) fail(errc::invalid_argument, "cone_over_mis needs a base graph");
        return make_cone_over_mis(*spec.base);
    }
    fail(errc::invalid_argument, "unknown family '" + f + "'");
}

} // namespace gp
