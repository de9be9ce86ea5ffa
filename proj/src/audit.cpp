#include "gp/audit.hpp"

#include <algorithm>
#include <json.hpp>
#include <mutex>
#include <sstream>

#include "gp/bounds.hpp"
#include "gp/distance.hpp"
#include "gp/families.hpp"
#include "gp/io.hpp"
#include "gp/position.hpp"
#include "gp/random.hpp"
#include "gp/removal.hpp"
#include "parallel.hpp"

namespace gp {

namespace {

const std::vector<std::string>& theorem_order() {
    static const std::vector<std::string> order = {
        "thm_3_1",  "prop_3_3",      "prop_5_1",    "thm_5_2",       "cor_5_3",
        "thm_6_2",  "thm_6_3",       "lemma_6_1",   "thm_2_1_cover", "prop_2_2_ip",
        "prop_2_3_tree", "thm_2_5_equiv", "order_diameter", "thm_3_1_split", "thm_6_2_split"};
    return order;
}

struct GraphAudit {
    std::map<std::string, TheoremTally> tallies;
    std::vector<std::string> violations;
    long long negative_drops = 0;

    void apply(const std::string& theorem, Flag flag, const std::string& context) {
        TheoremTally& t = tallies[theorem];
        switch (flag) {
        case Flag::holds:
            ++t.checked;
            ++t.held;
            break;
        case Flag::violated:
            ++t.checked;
            ++t.violated;
            violations.push_back(context + " violates " + theorem);
            break;
        case Flag::na:
            ++t.na;
            break;
        }
    }
};

// Maximal root-to-leaf geodesics of a BFS tree from vertex 0: a cheap valid
// isometric cover of any connected graph.
CoverSpec bfs_geodesic_cover(const Graph& g) {
    const int n = g.order();
    std::vector<int> parent(size_t(n), -1);
    std::vector<int> order;
    order.reserve(size_t(n));
    VertexSet seen(n);
    seen.set(0);
    order.push_back(0);
    for (size_t head = 0; head < order.size(); ++head) {
        const int v = order[head];
        g.neighbors(v).for_each([&](int w) {
            if (!seen.test(w)) {
                seen.set(w);
                parent[size_t(w)] = v;
                order.push_back(w);
            }
        });
    }
    std::vector<bool> has_child(size_t(n), false);
    for (int v = 0; v < n; ++v)
        if (parent[size_t(v)] >= 0) has_child[size_t(parent[size_t(v)])] = true;
    CoverSpec cover;
    for (int v = 0; v < n; ++v) {
        if (has_child[size_t(v)]) continue;
        VertexSet path(n);
        for (int cur = v; cur >= 0; cur = parent[size_t(cur)]) path.set(cur);
        cover.parts.push_back(std::move(path));
    }
    return cover;
}

void audit_graph(const CorpusEntry& entry, size_t index, const AuditOptions& options,
                 GraphAudit& out) {
    const Graph& g = *entry.graph;
    const int n = g.order();
    DistanceMatrix d(g);
    const GpCertificate before = gp_number(g);
    const std::string where = entry.label;

    // Vertex records, their flags, and the proof split of each gp witness.
    if (n >= 2) {
        for (int x = 0; x < n; ++x) {
            VertexSet witness_after(n);
            const RemovalRecord rec = detail::analyze_vertex(g, d, before, x, &witness_after);
            const std::string ctx = where + " [vertex " + rec.element + "]";
            for (const auto& [name, flag] : rec.theorem_flags) out.apply(name, flag, ctx);
            if (rec.gp_after < rec.gp_before - 1) ++out.negative_drops;
            try {
                const auto [r1, r2] = split_gp_set_on_vertex_removal(g, x, witness_after);
                const int need = (witness_after.count() + 1) / 2;
                out.apply("thm_3_1_split",
                          std::max(r1.count(), r2.count()) >= need ? Flag::holds : Flag::violated,
                          ctx);
            } catch (const std::exception&) {
                out.apply("thm_3_1_split", Flag::violated, ctx);
            }
        }
    }

    // Edge records, their flags, and the sidedness split of the gp witness.
    for (const EdgeRef& e : g.edges()) {
        const RemovalRecord rec = detail::analyze_edge(g, d, before, e);
        const std::string ctx = where + " [edge " + rec.element + "]";
        for (const auto& [name, flag] : rec.theorem_flags) out.apply(name, flag, ctx);
        try {
            const auto [xu, xv] = split_gp_set_on_edge_removal(g, e, before.witness);
            const int need = (before.witness.count() + 1) / 2;
            out.apply("thm_6_2_split",
                      std::max(xu.count(), xv.count()) >= need ? Flag::holds : Flag::violated, ctx);
        } catch (const std::exception&) {
            out.apply("thm_6_2_split", Flag::violated, ctx);
        }
    }

    // Order-diameter bound.
    out.apply("order_diameter", before.value <= n - d.diameter() + 1 ? Flag::holds : Flag::violated,
              where);

    // Isometric cover bound on a generated cover.
    try {
        const int bound = isometric_cover_bound(g, bfs_geodesic_cover(g));
        out.apply("thm_2_1_cover", before.value <= bound ? Flag::holds : Flag::violated, where);
    } catch (const std::exception&) {
        out.apply("thm_2_1_cover", Flag::violated, where + " [cover rejected]");
    }

    // Isometric-path bound on small graphs.
    if (n <= 9) {
        const int ip = isometric_path_number_exact(g);
        out.apply("prop_2_2_ip", before.value <= 2 * ip ? Flag::holds : Flag::violated, where);
    } else {
        out.apply("prop_2_2_ip", Flag::na, where);
    }

    // Tree law.
    if (n >= 2 && g.size() == n - 1)
        out.apply("prop_2_3_tree", before.value == leaves_count(g) ? Flag::holds : Flag::violated,
                  where);
    else
        out.apply("prop_2_3_tree", Flag::na, where);

    // Characterization equivalence on sampled subsets plus the witness and V.
    {
        SplitMix64 rng(options.sample_seed ^ (0xD1B54A32D192ED03ull * (uint64_t(index) + 1)));
        std::vector<VertexSet> samples;
        for (int s = 0; s < options.subset_samples; ++s) {
            VertexSet set(n);
            for (int v = 0; v < n; ++v)
                if (rng.next() & 1) set.set(v);
            samples.push_back(std::move(set));
        }
        samples.push_back(before.witness);
        samples.push_back(VertexSet::full(n));
        bool ok = true;
        for (const VertexSet& s : samples)
            if (is_general_position(d, s) != check_characterization(g, d, s).first) {
                ok = false;
                break;
            }
        out.apply("thm_2_5_equiv", ok ? Flag::holds : Flag::violated, where);
    }
}

} // namespace

std::vector<CorpusEntry> corpus_from_g6_text(std::string_view text) {
    std::vector<CorpusEntry> out;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t end = std::min(text.find('\n', pos), text.size());
        std::string line(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        // strip CR and surrounding blanks
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) {
            if (pos > text.size()) break;
            continue;
        }
        CorpusEntry entry;
        entry.label = "line " + std::to_string(line_no) + " (" + line + ")";
        try {
            entry.graph = g6_decode(line);
        } catch (const error& e) {
            entry.error = e.what();
        }
        out.push_back(std::move(entry));
        if (pos > text.size()) break;
    }
    return out;
}

std::vector<CorpusEntry> corpus_random(int samples, uint64_t seed, int max_order, double p) {
    if (samples < 1) fail(errc::invalid_argument, "need at least one sample");
    if (max_order < 2) fail(errc::invalid_argument, "random corpus needs max order >= 2");
    std::vector<CorpusEntry> out;
    out.reserve(size_t(samples));
    SplitMix64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        const int n = 2 + int(rng.next_below(uint32_t(max_order - 1)));
        const uint64_t sub_seed = rng.next();
        CorpusEntry entry;
        entry.label = "random #" + std::to_string(i) + " (n=" + std::to_string(n) + ")";
        entry.graph = random_connected_graph(n, p, sub_seed);
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<CorpusEntry> corpus_random_trees(int samples, uint64_t seed, int min_order,
                                             int max_order) {
    if (samples < 1) fail(errc::invalid_argument, "need at least one sample");
    if (min_order < 2 || max_order < min_order)
        fail(errc::invalid_argument, "tree corpus needs 2 <= min order <= max order");
    std::vector<CorpusEntry> out;
    out.reserve(size_t(samples));
    SplitMix64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        const int n = min_order + int(rng.next_below(uint32_t(max_order - min_order + 1)));
        const uint64_t sub_seed = rng.next();
        CorpusEntry entry;
        entry.label = "tree #" + std::to_string(i) + " (n=" + std::to_string(n) + ")";
        entry.graph = random_tree(n, sub_seed);
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<CorpusEntry> corpus_paper_suite() {
    std::vector<CorpusEntry> out;
    const auto add = [&](const std::string& label, const FamilySpec& spec) {
        out.push_back(CorpusEntry{label, generate(spec).graph, {}});
    };
    add("petersen", {"petersen", {}, {}});
    for (int n = 3; n <= 5; ++n) add("Hn(" + std::to_string(n) + ")", {"Hn", {n}, {}});
    for (int k = 2; k <= 4; ++k) add("Gk(" + std::to_string(k) + ")", {"Gk", {k}, {}});
    for (int n = 4; n <= 13; ++n) add("fan(" + std::to_string(n) + ")", {"fan", {n}, {}});
    for (int n = 2; n <= 6; ++n)
        add("star_subdivision(" + std::to_string(n) + ")", {"star_subdivision", {n}, {}});
    add("clique_amalgam(3,3,2)", {"clique_amalgam", {3, 3, 2}, {}});
    add("K_{4,2,2}", {"complete_multipartite", {4, 2, 2}, {}});
    for (int n = 2; n <= 5; ++n)
        for (int m = n; m <= 5; ++m)
            add("K_{" + std::to_string(n) + "," + std::to_string(m) + "}",
                {"complete_bipartite", {n, m}, {}});
    for (int n = 2; n <= 3; ++n)
        for (int m : {4, 5})
            add("strong(K_" + std::to_string(n) + ",C_" + std::to_string(m) + ")",
                {"strong_kn_cm", {n, m}, {}});
    for (int n = 3; n <= 5; ++n)
        for (int m = n; m <= 5; ++m)
            add("grid(" + std::to_string(n) + "," + std::to_string(m) + ")", {"grid", {n, m}, {}});
    add("Gk_prime(3)", {"Gk_prime", {3}, {}});
    add("Gk_dprime(3)", {"Gk_dprime", {3}, {}});
    for (int m = 3; m <= 6; ++m) add("Gm_gadget(" + std::to_string(m) + ")", {"Gm_gadget", {m}, {}});
    out.push_back(CorpusEntry{"cone_over_mis(grid(3,3))",
                              generate({"cone_over_mis", {}, generate({"grid", {3, 3}, {}}).graph})
                                  .graph,
                              {}});
    return out;
}

long long AuditReport::total_violations() const {
    long long total = 0;
    for (const auto& [name, tally] : tallies) total += tally.violated;
    return total;
}

const TheoremTally* AuditReport::tally(std::string_view theorem) const {
    for (const auto& [name, t] : tallies)
        if (name == theorem) return &t;
    return nullptr;
}

std::string AuditReport::render_text() const {
    std::ostringstream out;
    out << "graphs audited: " << graphs_audited << " (parse failures: " << parse_failures
        << ", skipped disconnected: " << skipped_disconnected << ")\n";
    out << "negative drop witnesses (gp(G-x) < gp(G)-1): " << negative_drop_witnesses << "\n";
    for (const auto& [name, t] : tallies)
        out << name << ": checked=" << t.checked << " held=" << t.held
            << " violated=" << t.violated << " na=" << t.na << "\n";
    for (const auto& msg : parse_errors) out << "parse failure: " << msg << "\n";
    for (const auto& msg : violations) out << "VIOLATION: " << msg << "\n";
    out << "violations: " << total_violations() << "\n";
    return out.str();
}

std::string AuditReport::render_json() const {
    nlohmann::ordered_json j;
    j["graphs_audited"] = graphs_audited;
    j["parse_failures"] = parse_failures;
    j["skipped_disconnected"] = skipped_disconnected;
    j["negative_drop_witnesses"] = negative_drop_witnesses;
    nlohmann::ordered_json tallies_json;
    for (const auto& [name, t] : tallies) {
        tallies_json[name] = {
            {"checked", t.checked}, {"held", t.held}, {"violated", t.violated}, {"na", t.na}};
    }
    j["tallies"] = std::move(tallies_json);
    j["parse_errors"] = parse_errors;
    j["violations"] = violations;
    j["total_violations"] = total_violations();
    return j.dump(2) + "\n";
}

AuditReport theorem_audit(const std::vector<CorpusEntry>& corpus, const AuditOptions& options) {
    AuditReport report;
    for (const std::string& name : theorem_order()) report.tallies.emplace_back(name, TheoremTally{});

    std::vector<GraphAudit> per_graph(corpus.size());
    std::vector<int> status(corpus.size(), 0); // 0 ok, 1 parse failure, 2 disconnected

    gp::detail::parallel_for(int(corpus.size()), options.threads, [&](int i) {
        const CorpusEntry& entry = corpus[size_t(i)];
        if (!entry.graph) {
            status[size_t(i)] = 1;
            return;
        }
        if (!entry.graph->is_connected()) {
            status[size_t(i)] = 2;
            return;
        }
        audit_graph(entry, size_t(i), options, per_graph[size_t(i)]);
    });

    for (size_t i = 0; i < corpus.size(); ++i) {
        switch (status[i]) {
        case 1:
            ++report.parse_failures;
            report.parse_errors.push_back(corpus[i].label + ": " + corpus[i].error);
            continue;
        case 2:
            ++report.skipped_disconnected;
            continue;
        default:
            break;
        }
        ++report.graphs_audited;
        const GraphAudit& audit = per_graph[i];
        report.negative_drop_witnesses += audit.negative_drops;
        for (auto& [name, tally] : report.tallies) {
            const auto it = audit.tallies.find(name);
            if (it == audit.tallies.end()) continue;
            tally.checked += it->second.checked;
            tally.held += it->second.held;
            tally.violated += it->second.violated;
            tally.na += it->second.na;
        }
        report.violations.insert(report.violations.end(), audit.violations.begin(),
                                 audit.violations.end());
    }
    return report;
}

} // namespace gp
