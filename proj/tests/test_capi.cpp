#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <string>
#include <vector>

#include "gp.h"

namespace {

struct Handle {
    gp_graph* g = nullptr;
    ~Handle() { gp_graph_free(g); }
};

struct Owned {
    char* s = nullptr;
    ~Owned() { gp_string_free(s); }
};

Handle petersen() {
    Handle h;
    REQUIRE(gp_family("petersen", nullptr, 0, nullptr, &h.g, nullptr) == GP_OK);
    return h;
}

} // namespace

TEST_CASE("graph lifecycle and errors") {
    const int32_t edges[] = {0, 1, 1, 2};
    Handle h;
    REQUIRE(gp_graph_build(3, edges, 2, &h.g) == GP_OK);
    CHECK(gp_graph_order(h.g) == 3);
    CHECK(gp_graph_size(h.g) == 2);
    CHECK(gp_graph_has_edge(h.g, 0, 1) == 1);
    CHECK(gp_graph_has_edge(h.g, 0, 2) == 0);
    CHECK(gp_graph_has_edge(h.g, 0, 9) == -1);
    CHECK(gp_graph_is_connected(h.g) == 1);

    SUBCASE("self-loop is an invalid argument with a message") {
        const int32_t loop[] = {1, 1};
        gp_graph* out = nullptr;
        CHECK(gp_graph_build(3, loop, 1, &out) == GP_ERR_INVALID_ARGUMENT);
        CHECK(std::strlen(gp_last_error()) > 0);
        CHECK(out == nullptr);
    }
    SUBCASE("null arguments are rejected") {
        CHECK(gp_graph_build(3, nullptr, 2, nullptr) == GP_ERR_INVALID_ARGUMENT);
        CHECK(gp_graph_order(nullptr) == -1);
    }
}

TEST_CASE("codecs through the C surface") {
    Handle h;
    REQUIRE(gp_graph_from_g6("Bw", &h.g) == GP_OK);
    CHECK(gp_graph_size(h.g) == 3);
    Owned text;
    REQUIRE(gp_graph_to_g6(h.g, &text.s) == GP_OK);
    CHECK(std::string(text.s) == "Bw");

    Owned edges;
    REQUIRE(gp_graph_to_edge_list(h.g, &edges.s) == GP_OK);
    Handle back;
    REQUIRE(gp_graph_from_edge_list(edges.s, &back.g) == GP_OK);
    CHECK(gp_graph_size(back.g) == 3);

    gp_graph* bad = nullptr;
    CHECK(gp_graph_from_g6("Bww", &bad) == GP_ERR_PARSE);
    CHECK(gp_graph_from_edge_list("nonsense", &bad) == GP_ERR_PARSE);
}

TEST_CASE("metric queries") {
    Handle h = petersen();
    CHECK(gp_graph_diameter(h.g) == 2);
    CHECK(gp_graph_distance(h.g, 0, 1) == 1);
    CHECK(gp_graph_distance(h.g, 0, 7) == 2);
    CHECK(gp_graph_distance(h.g, 0, 11) == -1);

    const int32_t pair[] = {0, 1, 2, 3};
    Handle split;
    REQUIRE(gp_graph_build(4, pair, 2, &split.g) == GP_OK);
    CHECK(gp_graph_distance(split.g, 0, 2) == 4); // sentinel = order
    CHECK(gp_graph_diameter(split.g) == 4);
    CHECK(gp_graph_is_connected(split.g) == 0);
}

TEST_CASE("families and landmarks") {
    Handle h;
    Owned landmarks;
    const int32_t params[] = {3};
    REQUIRE(gp_family("Hn", params, 1, nullptr, &h.g, &landmarks.s) == GP_OK);
    CHECK(gp_graph_order(h.g) == 11);
    CHECK(gp_graph_size(h.g) == 25);
    const auto parsed = nlohmann::json::parse(landmarks.s);
    CHECK(parsed["vertices"]["x"] == 6);
    CHECK(parsed["vertices"]["x_prime"] == 7);

    SUBCASE("cone_over_mis consumes a base graph") {
        const int32_t grid_params[] = {3, 3};
        Handle base;
        REQUIRE(gp_family("grid", grid_params, 2, nullptr, &base.g, nullptr) == GP_OK);
        Handle cone;
        Owned cone_landmarks;
        REQUIRE(gp_family("cone_over_mis", nullptr, 0, base.g, &cone.g, &cone_landmarks.s) ==
                GP_OK);
        CHECK(gp_graph_order(cone.g) == 10);
        CHECK(nlohmann::json::parse(cone_landmarks.s)["vertices"]["apex"] == 9);
    }
    SUBCASE("bad names and parameters") {
        gp_graph* out = nullptr;
        CHECK(gp_family("mystery", nullptr, 0, nullptr, &out, nullptr) ==
              GP_ERR_INVALID_ARGUMENT);
        const int32_t bad[] = {1};
        CHECK(gp_family("Hn", bad, 1, nullptr, &out, nullptr) == GP_ERR_INVALID_ARGUMENT);
        CHECK(gp_family("grid", params, 1, nullptr, &out, nullptr) == GP_ERR_INVALID_ARGUMENT);
        CHECK(std::string(gp_family_names()).find("Gk_prime") != std::string::npos);
    }
}

TEST_CASE("solvers through the C surface") {
    Handle h = petersen();
    int32_t value = 0, wlen = 0;
    std::vector<int32_t> witness(10);
    REQUIRE(gp_number(h.g, &value, witness.data(), &wlen) == GP_OK);
    CHECK(value == 6);
    CHECK(wlen == 6);

    int verdict = -1;
    REQUIRE(gp_is_general_position(h.g, witness.data(), size_t(wlen), &verdict) == GP_OK);
    CHECK(verdict == 1);

    int32_t oracle = 0;
    REQUIRE(gp_brute_force(h.g, &oracle, nullptr, nullptr) == GP_OK);
    CHECK(oracle == value);

    int32_t alpha = 0;
    REQUIRE(gp_independence_number(h.g, &alpha, nullptr, nullptr) == GP_OK);
    CHECK(alpha == 4);

    int32_t ip = 0;
    REQUIRE(gp_isometric_path_number(h.g, &ip) == GP_OK);
    CHECK(value <= 2 * ip);

    SUBCASE("forcing and membership") {
        const int32_t star_edges[] = {0, 1, 0, 2, 0, 3};
        Handle star;
        REQUIRE(gp_graph_build(4, star_edges, 3, &star.g) == GP_OK);
        const int32_t center[] = {0};
        int32_t forced = 0;
        REQUIRE(gp_number_forcing(star.g, center, 1, &forced, nullptr, nullptr) == GP_OK);
        CHECK(forced == 2);
        int in_some = -1;
        REQUIRE(gp_in_some_gp_set(star.g, 0, &in_some) == GP_OK);
        CHECK(in_some == 0);

        const int32_t path_edges[] = {0, 1, 1, 2, 2, 3};
        Handle p4;
        REQUIRE(gp_graph_build(4, path_edges, 3, &p4.g) == GP_OK);
        const int32_t collinear[] = {0, 1, 2};
        CHECK(gp_number_forcing(p4.g, collinear, 3, &forced, nullptr, nullptr) ==
              GP_ERR_INFEASIBLE);
    }
    SUBCASE("GP_MAX_N lowers the oracle caps") {
        setenv("GP_MAX_N", "5", 1);
        int32_t capped = 0;
        CHECK(gp_brute_force(h.g, &capped, nullptr, nullptr) == GP_ERR_CAP_EXCEEDED);
        unsetenv("GP_MAX_N");
        CHECK(gp_brute_force(h.g, &capped, nullptr, nullptr) == GP_OK);
    }
    SUBCASE("the leaf count is exposed") {
        const int32_t tree[] = {0, 1, 1, 2, 1, 3};
        Handle t;
        REQUIRE(gp_graph_build(4, tree, 3, &t.g) == GP_OK);
        CHECK(gp_leaves_count(t.g) == 3);
    }
}

TEST_CASE("deletion through the C surface") {
    Handle h = petersen();
    std::vector<int32_t> relabel(10);
    Handle smaller;
    REQUIRE(gp_graph_delete_vertex(h.g, 3, &smaller.g, relabel.data()) == GP_OK);
    CHECK(gp_graph_order(smaller.g) == 9);
    CHECK(relabel[3] == -1);
    CHECK(relabel[9] == 8);

    Handle no_edge;
    REQUIRE(gp_graph_delete_edge(h.g, 0, 1, &no_edge.g) == GP_OK);
    CHECK(gp_graph_size(no_edge.g) == 14);
    gp_graph* out = nullptr;
    CHECK(gp_graph_delete_edge(h.g, 0, 7, &out) == GP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("scans through the C surface") {
    Handle h;
    const int32_t params[] = {4};
    REQUIRE(gp_family("cycle", params, 1, nullptr, &h.g, nullptr) == GP_OK);

    Owned csv;
    REQUIRE(gp_vertex_scan(h.g, GP_RENDER_CSV, 2, &csv.s) == GP_OK);
    CHECK(std::string(csv.s).find("element,gp_before,gp_after") == 0);

    Owned json_text;
    REQUIRE(gp_edge_scan(h.g, GP_RENDER_JSON, 1, &json_text.s) == GP_OK);
    const auto rows = nlohmann::json::parse(json_text.s);
    CHECK(rows.size() == 4);
    CHECK(rows[0]["theorem_flags"]["lemma_6_1"] == "holds");
}

TEST_CASE("audit through the C surface") {
    gp_audit_options options{};
    options.mode = GP_AUDIT_RANDOM;
    options.samples = 25;
    options.seed = 5;
    options.max_order = 7;
    options.threads = 2;

    Owned summary;
    int64_t violations = -1;
    REQUIRE(gp_audit(&options, GP_RENDER_CSV, &summary.s, &violations) == GP_OK);
    CHECK(violations == 0);
    CHECK(std::string(summary.s).find("graphs audited: 25") != std::string::npos);

    SUBCASE("g6 text mode with a bad line keeps going") {
        gp_audit_options stream{};
        stream.mode = GP_AUDIT_G6_TEXT;
        stream.g6_text = "Bw\n???bad???\n";
        Owned json_summary;
        REQUIRE(gp_audit(&stream, GP_RENDER_JSON, &json_summary.s, &violations) == GP_OK);
        CHECK(violations == 0);
        const auto parsed = nlohmann::json::parse(json_summary.s);
        CHECK(parsed["graphs_audited"] == 1);
        CHECK(parsed["parse_failures"] == 1);
    }
}
