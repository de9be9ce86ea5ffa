#include <doctest.h>

#include "gp/families.hpp"
#include "gp/graph.hpp"

using namespace gp;

TEST_CASE("build_graph basics") {
    const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);
    CHECK(p3.has_edge(1, 0));
    CHECK(!p3.has_edge(0, 2));

    const Graph k1 = build_graph(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);

    const Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c4.size() == 4);

    SUBCASE("duplicate pairs collapse") {
        const Graph g = build_graph(3, {{0, 1}, {1, 0}, {0, 1}});
        CHECK(g.size() == 1);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(build_graph(3, {{0, 3}}), error);
        CHECK_THROWS_AS(build_graph(3, {{-1, 0}}), error);
        CHECK_THROWS_AS(build_graph(3, {{1, 1}}), error);
        CHECK_THROWS_AS(build_graph(0, {}), error);
    }
}

TEST_CASE("delete_vertex relabels contiguously") {
    SUBCASE("star subdivision minus center is a perfect matching") {
        const auto fam = generate({"star_subdivision", {3}, {}});
        const auto del = delete_vertex(fam.graph, fam.landmarks.vertices.at("center"));
        CHECK(del.graph.order() == 6);
        CHECK(del.graph.size() == 3);
        const auto comps = connected_components(del.graph);
        CHECK(comps.size() == 3);
        for (const auto& c : comps) CHECK(c.count() == 2);
    }
    SUBCASE("fan minus hub is a path") {
        const auto fam = generate({"fan", {5}, {}});
        const auto del = delete_vertex(fam.graph, fam.landmarks.vertices.at("hub"));
        CHECK(del.graph.order() == 5);
        CHECK(del.graph.size() == 4);
        CHECK(del.graph.is_connected());
        int deg1 = 0;
        for (int v = 0; v < 5; ++v)
            if (del.graph.degree(v) == 1) ++deg1;
        CHECK(deg1 == 2);
    }
    SUBCASE("complete graph shrinks") {
        const auto k4 = generate({"complete", {4}, {}}).graph;
        const auto del = delete_vertex(k4, 2);
        CHECK(del.graph == generate({"complete", {3}, {}}).graph);
        CHECK(del.relabel == std::vector<int>{0, 1, -1, 2});
    }
    SUBCASE("last vertex rejected") {
        CHECK_THROWS_AS(delete_vertex(build_graph(1, {}), 0), error);
    }
}

TEST_CASE("delete_edge") {
    const Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const Graph p4 = delete_edge(c4, EdgeRef::make(1, 0));
    CHECK(p4.size() == 3);
    CHECK(!p4.has_edge(0, 1));
    CHECK(p4.is_connected());

    const Graph k3 = generate({"complete", {3}, {}}).graph;
    const Graph path = delete_edge(k3, EdgeRef::make(0, 1));
    CHECK(path.size() == 2);

    CHECK_THROWS_AS(delete_edge(p4, EdgeRef::make(0, 1)), error);
    CHECK_THROWS_AS(EdgeRef::make(2, 2), error);
}

TEST_CASE("connected_components") {
    const Graph p5 = generate({"path", {5}, {}}).graph;
    CHECK(connected_components(p5).size() == 1);
    CHECK(connected_components(p5)[0].count() == 5);

    const auto fam = generate({"star_subdivision", {4}, {}});
    const auto del = delete_vertex(fam.graph, 0);
    const auto comps = connected_components(del.graph);
    CHECK(comps.size() == 4);
    for (const auto& c : comps) CHECK(c.count() == 2);

    CHECK(connected_components(build_graph(1, {})).size() == 1);
}

TEST_CASE("induced_subgraph keeps host order") {
    const Graph c5 = generate({"cycle", {5}, {}}).graph;
    const auto sub = induced_subgraph(c5, VertexSet::of(5, {0, 1, 3}));
    CHECK(sub.graph.order() == 3);
    CHECK(sub.graph.size() == 1); // only 0-1 survives
    CHECK(sub.to_host == std::vector<int>{0, 1, 3});
    CHECK_THROWS_AS(induced_subgraph(c5, VertexSet(5)), error);
}
