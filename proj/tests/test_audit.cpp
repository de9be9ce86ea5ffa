#include <doctest.h>

#include "gp/audit.hpp"
#include "gp/io.hpp"
#include "support/corpus.hpp"

using namespace gp;
using namespace testsupport;

TEST_CASE("audit on a single K_2 holds or is n/a everywhere") {
    const std::vector<CorpusEntry> corpus{{"K_2", Graph(2, {{0, 1}}), {}}};
    const AuditReport report = theorem_audit(corpus);
    CHECK(report.graphs_audited == 1);
    CHECK(report.total_violations() == 0);
    const TheoremTally* t62 = report.tally("thm_6_2");
    REQUIRE(t62);
    CHECK(t62->checked == 1);
    CHECK(t62->held == 1);
    const TheoremTally* tree = report.tally("prop_2_3_tree");
    REQUIRE(tree);
    CHECK(tree->held == 1);
}

TEST_CASE("audit on seeded random corpora is clean") {
    const AuditReport report = theorem_audit(corpus_random(60, 11, 8, 0.5));
    CHECK(report.graphs_audited == 60);
    CHECK(report.parse_failures == 0);
    CHECK(report.total_violations() == 0);
    CHECK(report.tally("thm_3_1")->checked > 0);
    CHECK(report.tally("thm_2_5_equiv")->checked == 60);
    CHECK(report.tally("prop_2_2_ip")->na == 0); // max order 8, all under the ip cap

    SUBCASE("thread count changes nothing") {
        const AuditOptions threaded{.threads = 4};
        const AuditReport parallel = theorem_audit(corpus_random(60, 11, 8, 0.5), threaded);
        CHECK(parallel.render_text() == report.render_text());
    }
}

TEST_CASE("audit stream handling") {
    SUBCASE("parse failures are reported per line and the audit continues") {
        const auto corpus = corpus_from_g6_text("Bw\nnot-a-graph!!!\nBg\n");
        CHECK(corpus.size() == 3);
        const AuditReport report = theorem_audit(corpus);
        CHECK(report.graphs_audited == 2);
        CHECK(report.parse_failures == 1);
        REQUIRE(report.parse_errors.size() == 1);
        CHECK(report.parse_errors[0].find("line 2") != std::string::npos);
        CHECK(report.total_violations() == 0);
    }
    SUBCASE("disconnected graphs are skipped, not audited") {
        const Graph two_k2 = build_graph(4, {{0, 1}, {2, 3}});
        const auto corpus = corpus_from_g6_text(g6_encode(two_k2) + "\nBw\n");
        const AuditReport report = theorem_audit(corpus);
        CHECK(report.graphs_audited == 1);
        CHECK(report.skipped_disconnected == 1);
    }
}

TEST_CASE("audit finds the negative-result witnesses in the paper suite") {
    const AuditReport report = theorem_audit(corpus_paper_suite(), AuditOptions{.threads = 4});
    CHECK(report.graphs_audited >= 50);
    CHECK(report.total_violations() == 0);
    CHECK(report.negative_drop_witnesses > 0); // fan hubs drop gp far below gp-1
    // every theorem in the battery is actually exercised
    for (const auto& [name, tally] : report.tallies) {
        INFO(name);
        CHECK(tally.checked > 0);
    }
    CHECK(report.tally("thm_5_2")->violated == 0);
    CHECK(report.tally("thm_6_3")->violated == 0);
}

TEST_CASE("audit of every connected graph on up to 5 vertices") {
    std::string stream;
    for (const Graph& g : connected_graphs_up_to(5)) stream += g6_encode(g) + "\n";
    const AuditReport report = theorem_audit(corpus_from_g6_text(stream), AuditOptions{.threads = 4});
    CHECK(report.graphs_audited == 31); // 1 + 1 + 2 + 6 + 21
    CHECK(report.total_violations() == 0);
}

TEST_CASE("audit summaries render deterministically") {
    const auto corpus = corpus_from_g6_text("Bw\n");
    const AuditReport a = theorem_audit(corpus);
    const AuditReport b = theorem_audit(corpus);
    CHECK(a.render_text() == b.render_text());
    CHECK(a.render_json() == b.render_json());
    CHECK(a.render_json().find("\"total_violations\": 0") != std::string::npos);
}
