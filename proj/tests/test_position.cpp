#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "gp/families.hpp"
#include "gp/position.hpp"
#include "gp/random.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace gp;
using namespace testsupport;

TEST_CASE("is_general_position") {
    const Graph p4 = generate({"path", {4}, {}}).graph;
    DistanceMatrix d(p4);
    CHECK(is_general_position(d, VertexSet::of(4, {0, 3})));
    CHECK(!is_general_position(d, VertexSet::of(4, {0, 1, 2})));
    CHECK(is_general_position(d, VertexSet(4))); // empty set

    const Graph k4 = generate({"complete", {4}, {}}).graph;
    CHECK(is_general_position(DistanceMatrix(k4), VertexSet::full(4)));
}

TEST_CASE("check_characterization") {
    SUBCASE("C_6 alternating triple") {
        const Graph c6 = generate({"cycle", {6}, {}}).graph;
        DistanceMatrix d(c6);
        const auto [ok, rep] = check_characterization(c6, d, VertexSet::of(6, {0, 2, 4}));
        CHECK(ok);
        CHECK(rep.blocks.size() == 3);
        for (const auto& b : rep.blocks) CHECK(b.count() == 1);
        CHECK(rep.block_distance[0][1] == 2);
        CHECK(rep.block_distance[0][2] == 2);
        CHECK(rep.block_distance[1][2] == 2);
        CHECK(rep.in_transitive);
    }
    SUBCASE("P_4 non-constant blocks") {
        const Graph p4 = generate({"path", {4}, {}}).graph;
        DistanceMatrix d(p4);
        const auto [ok, rep] = check_characterization(p4, d, VertexSet::of(4, {0, 1, 3}));
        CHECK(!ok);
        CHECK(rep.blocks_complete);
        CHECK(!rep.distance_constant);
    }
    SUBCASE("complete graph subsets are single blocks") {
        const Graph k5 = generate({"complete", {5}, {}}).graph;
        DistanceMatrix d(k5);
        const auto [ok, rep] = check_characterization(k5, d, VertexSet::of(5, {0, 2, 3}));
        CHECK(ok);
        CHECK(rep.blocks.size() == 1);
    }
    SUBCASE("disconnected host rejected") {
        const Graph two = build_graph(4, {{0, 1}, {2, 3}});
        CHECK_THROWS_AS(check_characterization(two, DistanceMatrix(two), VertexSet(4)), error);
    }
}

TEST_CASE("gp_number on named graphs") {
    CHECK(gp_number(generate({"petersen", {}, {}}).graph).value == 6);
    CHECK(gp_number(generate({"grid", {3, 3}, {}}).graph).value == 4);
    CHECK(gp_number(generate({"fan", {5}, {}}).graph).value == 4);
    CHECK(gp_number(build_graph(1, {})).value == 1);
    CHECK(gp_number(generate({"cycle", {5}, {}}).graph).value == 3);
    CHECK(gp_number(generate({"cycle", {4}, {}}).graph).value == 2);
    CHECK(gp_number(generate({"complete", {5}, {}}).graph).value == 5);

    SUBCASE("disjoint unions sum over components") {
        const Graph three_k2 = build_graph(6, {{0, 1}, {2, 3}, {4, 5}});
        const auto cert = gp_number(three_k2);
        CHECK(cert.value == 6);
        CHECK(cert.witness == VertexSet::full(6));
    }
    SUBCASE("witness is a maximum general position set") {
        const Graph petersen = generate({"petersen", {}, {}}).graph;
        const auto cert = gp_number(petersen);
        CHECK(cert.witness.count() == cert.value);
        CHECK(is_general_position(DistanceMatrix(petersen), cert.witness));
    }
}

TEST_CASE("gp_number_forcing") {
    const Graph k4 = generate({"complete", {4}, {}}).graph;
    CHECK(gp_number_forcing(k4, VertexSet::of(4, {0}))->value == 4);

    const Graph star = generate({"complete_bipartite", {1, 3}, {}}).graph; // K_{1,3}, center 0
    const auto star_center = gp_number_forcing(star, VertexSet::of(4, {0}));
    REQUIRE(star_center.has_value());
    CHECK(star_center->value == *oracle_gp_forcing(star, 1u << 0));
    CHECK(star_center->value == 2);

    const Graph p4 = generate({"path", {4}, {}}).graph;
    const auto forced = gp_number_forcing(p4, VertexSet::of(4, {1, 2}));
    REQUIRE(forced.has_value());
    CHECK(forced->value == 2);
    CHECK(forced->value == *oracle_gp_forcing(p4, (1u << 1) | (1u << 2)));

    SUBCASE("infeasible when the required set is not general position") {
        CHECK(!gp_number_forcing(p4, VertexSet::of(4, {0, 1, 2})).has_value());
        CHECK(!oracle_gp_forcing(p4, 0b0111).has_value());
    }
    SUBCASE("matches the exhaustive oracle on a random corpus") {
        for (uint64_t seed = 1; seed <= 12; ++seed) {
            const Graph g = random_connected_graph(7, 0.4, seed);
            SplitMix64 rng(seed);
            const uint32_t required = uint32_t(rng.next() & 0x7f);
            VertexSet req(7);
            for (int v = 0; v < 7; ++v)
                if (required >> v & 1) req.set(v);
            const auto got = gp_number_forcing(g, req);
            const auto want = oracle_gp_forcing(g, required);
            CHECK(got.has_value() == want.has_value());
            if (got && want) CHECK(got->value == *want);
        }
    }
}

TEST_CASE("in_some_gp_set") {
    const Graph k5 = generate({"complete", {5}, {}}).graph;
    for (int v = 0; v < 5; ++v) CHECK(in_some_gp_set(k5, v));

    const Graph star = generate({"complete_bipartite", {1, 3}, {}}).graph;
    CHECK(!in_some_gp_set(star, 0));
    CHECK(oracle_in_some_gp_set(star, 0) == false);
    CHECK(in_some_gp_set(star, 1));

    SUBCASE("every vertex of P_5 lies in a maximum pair") {
        const Graph p5 = generate({"path", {5}, {}}).graph;
        for (int v = 0; v < 5; ++v) {
            CHECK(oracle_in_some_gp_set(p5, v));
            CHECK(in_some_gp_set(p5, v) == oracle_in_some_gp_set(p5, v));
        }
    }
    SUBCASE("matches the oracle on small connected graphs") {
        for (const Graph& g : all_connected_graphs(5))
            for (int v = 0; v < g.order(); ++v)
                CHECK(in_some_gp_set(g, v) == oracle_in_some_gp_set(g, v));
    }
}

TEST_CASE("brute_force_gp") {
    CHECK(brute_force_gp(generate({"cycle", {5}, {}}).graph).value == 3);
    CHECK(brute_force_gp(generate({"cycle", {4}, {}}).graph).value == 2);
    CHECK(brute_force_gp(generate({"complete", {5}, {}}).graph).value == 5);
    CHECK(brute_force_gp(build_graph(6, {{0, 1}, {2, 3}, {4, 5}})).value == 6);

    SUBCASE("hand-checked C_5 witness") {
        const auto cert = brute_force_gp(generate({"cycle", {5}, {}}).graph);
        CHECK(cert.witness == VertexSet::of(5, {0, 1, 3}));
    }
    SUBCASE("cap is a hard error") {
        CHECK_THROWS_AS(brute_force_gp(generate({"path", {21}, {}}).graph), error);
        CHECK_THROWS_AS(brute_force_gp(generate({"path", {8}, {}}).graph, 7), error);
    }
}

TEST_CASE("solver agrees with the oracle") {
    SUBCASE("all connected graphs up to 6 vertices") {
        for (const Graph& g : connected_graphs_up_to(6))
            CHECK(gp_number(g).value == brute_force_gp(g).value);
    }
    SUBCASE("seeded random connected graphs") {
        for (uint64_t seed = 1; seed <= 40; ++seed) {
            const Graph g = random_connected_graph(2 + int(seed % 9), 0.45, seed);
            CHECK(gp_number(g).value == brute_force_gp(g).value);
        }
    }
}

TEST_CASE("characterization equivalence with the triple check") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        const Graph g = random_connected_graph(2 + int(seed % 8), 0.5, seed);
        DistanceMatrix d(g);
        SplitMix64 rng(seed * 31);
        for (int trial = 0; trial < 40; ++trial) {
            VertexSet s(g.order());
            for (int v = 0; v < g.order(); ++v)
                if (rng.next() & 1) s.set(v);
            CHECK(is_general_position(d, s) == check_characterization(g, d, s).first);
        }
    }
}

TEST_CASE("general position is hereditary") {
    for (uint64_t seed = 1; seed <= 15; ++seed) {
        const Graph g = random_connected_graph(8, 0.4, seed);
        DistanceMatrix d(g);
        const auto cert = gp_number(g);
        SplitMix64 rng(seed);
        for (int trial = 0; trial < 10; ++trial) {
            VertexSet sub(g.order());
            cert.witness.for_each([&](int v) {
                if (rng.next() & 1) sub.set(v);
            });
            CHECK(is_general_position(d, sub));
        }
    }
}

TEST_CASE("tree law: gp equals the leaf count") {
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        const Graph t = random_tree(2 + int(seed % 19), seed);
        CHECK(gp_number(t).value == leaves_count(t));
    }
}

TEST_CASE("fan law") {
    const auto expected = [](int n) { return (2 * (n + 1) + 2) / 3; }; // ceil(2(n+1)/3)
    for (int n = 4; n <= 8; ++n)
        CHECK(gp_number(generate({"fan", {n}, {}}).graph).value == expected(n));
}

TEST_CASE("order-diameter bound") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        const Graph g = random_connected_graph(2 + int(seed % 9), 0.4, seed);
        DistanceMatrix d(g);
        CHECK(gp_number(g).value <= g.order() - d.diameter() + 1);
    }
}

TEST_CASE("gp_number is invariant under relabeling") {
    for (uint64_t seed = 1; seed <= 15; ++seed) {
        const Graph g = random_connected_graph(8, 0.4, seed);
        std::vector<int> perm(8);
        std::iota(perm.begin(), perm.end(), 0);
        SplitMix64 rng(seed * 17);
        for (int i = 7; i > 0; --i)
            std::swap(perm[size_t(i)], perm[rng.next_below(uint32_t(i + 1))]);
        std::vector<std::pair<int, int>> edges;
        for (const EdgeRef& e : g.edges())
            edges.emplace_back(perm[size_t(e.u)], perm[size_t(e.v)]);
        CHECK(gp_number(Graph(8, edges)).value == gp_number(g).value);
    }
}

TEST_CASE("independence_number") {
    CHECK(independence_number(generate({"cycle", {5}, {}}).graph).first == 2);
    CHECK(independence_number(generate({"complete_bipartite", {3, 4}, {}}).graph).first == 4);
    CHECK(independence_number(generate({"petersen", {}, {}}).graph).first == 4);

    SUBCASE("witness is independent and lexicographically first") {
        const Graph c6 = generate({"cycle", {6}, {}}).graph;
        const auto [alpha, witness] = independence_number(c6);
        CHECK(alpha == 3);
        CHECK(witness == VertexSet::of(6, {0, 2, 4}));
    }
    SUBCASE("cap is a hard error") {
        CHECK_THROWS_AS(independence_number(random_tree(41, 1)), error);
    }
}

TEST_CASE("leaves_count") {
    CHECK(leaves_count(generate({"path", {7}, {}}).graph) == 2);
    CHECK(leaves_count(generate({"complete_bipartite", {1, 6}, {}}).graph) == 6);
    CHECK(leaves_count(generate({"star_subdivision", {5}, {}}).graph) == 5);
    CHECK(leaves_count(build_graph(1, {})) == 0);
}
