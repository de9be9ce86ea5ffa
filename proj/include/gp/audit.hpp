#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gp/graph.hpp"

namespace gp {

struct CorpusEntry {
    std::string label;
    std::optional<Graph> graph; // empty = parse failure, see error
    std::string error;
};

std::vector<CorpusEntry> corpus_from_g6_text(std::string_view text);
std::vector<CorpusEntry> corpus_random(int samples, uint64_t seed, int max_order, double p);
std::vector<CorpusEntry> corpus_random_trees(int samples, uint64_t seed, int min_order,
                                             int max_order);
// Every family instance behind the acceptance tables.
std::vector<CorpusEntry> corpus_paper_suite();

struct AuditOptions {
    int threads = 1;
    int subset_samples = 24;                       // Thm 2.5 equivalence samples per graph
    uint64_t sample_seed = 0x9E3779B97F4A7C15ull;
};

struct TheoremTally {
    long long checked = 0;
    long long held = 0;
    long long violated = 0;
    long long na = 0;
};

struct AuditReport {
    std::vector<std::pair<std::string, TheoremTally>> tallies; // fixed theorem order
    long long graphs_audited = 0;
    long long parse_failures = 0;
    long long skipped_disconnected = 0;
    long long negative_drop_witnesses = 0; // records with gp(G-x) < gp(G) - 1
    std::vector<std::string> violations;   // messages naming graph, element, theorem
    std::vector<std::string> parse_errors;

    long long total_violations() const;
    const TheoremTally* tally(std::string_view theorem) const;
    std::string render_text() const;
    std::string render_json() const;
};

// Runs the full property battery on every connected corpus graph: vertex and
// edge scans with their theorem flags, geodesic preservation, the proof
// splits, the characterization equivalence on sampled subsets, the tree law,
// the order-diameter bound, a generated isometric cover bound, and the
// isometric-path bound on small graphs. Disconnected entries are counted and
// skipped; parse failures are reported and the audit continues.
AuditReport theorem_audit(const std::vector<CorpusEntry>& corpus, const AuditOptions& options = {});

} // namespace gp
