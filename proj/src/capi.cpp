#include "gp.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <string>

#include "gp/audit.hpp"
#include "gp/bounds.hpp"
#include "gp/distance.hpp"
#include "gp/families.hpp"
#include "gp/io.hpp"
#include "gp/position.hpp"
#include "gp/removal.hpp"

using namespace gp;

struct gp_graph {
    Graph g;
};

namespace {

thread_local std::string t_last_error;

gp_status set_error(gp_status status, const std::string& what) {
    t_last_error = what;
    return status;
}

gp_status from_errc(const error& e) {
    switch (e.code()) {
    case errc::invalid_argument: return set_error(GP_ERR_INVALID_ARGUMENT, e.what());
    case errc::parse: return set_error(GP_ERR_PARSE, e.what());
    case errc::cap_exceeded: return set_error(GP_ERR_CAP_EXCEEDED, e.what());
    }
    return set_error(GP_ERR_INTERNAL, e.what());
}

template <class Fn>
gp_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const error& e) {
        return from_errc(e);
    } catch (const std::exception& e) {
        return set_error(GP_ERR_INTERNAL, e.what());
    }
}

char* copy_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out) std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

gp_status require(bool ok, const char* what) {
    return ok ? GP_OK : set_error(GP_ERR_INVALID_ARGUMENT, what);
}

void emit_witness(const VertexSet& witness, int32_t* out, int32_t* out_len) {
    int32_t len = 0;
    witness.for_each([&](int v) {
        if (out) out[len] = v;
        ++len;
    });
    if (out_len) *out_len = len;
}

// GP_MAX_N lowers, never raises, the oracle order caps.
int effective_cap(int hard_cap) {
    const char* env = std::getenv("GP_MAX_N");
    if (!env || !*env) return hard_cap;
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end || value < 1) return hard_cap;
    return int(std::min<long>(hard_cap, value));
}

std::string landmarks_to_json(const Landmarks& lm) {
    nlohmann::ordered_json j;
    auto verts = nlohmann::ordered_json::object();
    for (const auto& [name, v] : lm.vertices) verts[name] = v;
    auto edges = nlohmann::ordered_json::object();
    for (const auto& [name, e] : lm.edges) edges[name] = {e.u, e.v};
    j["vertices"] = std::move(verts);
    j["edges"] = std::move(edges);
    return j.dump();
}

} // namespace

extern "C" {

const char* gp_version(void) { return "0.1.0"; }

const char* gp_status_name(gp_status status) {
    switch (status) {
    case GP_OK: return "ok";
    case GP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GP_ERR_PARSE: return "parse error";
    case GP_ERR_CAP_EXCEEDED: return "cap exceeded";
    case GP_ERR_INFEASIBLE: return "infeasible";
    default: return "internal error";
    }
}

const char* gp_last_error(void) { return t_last_error.c_str(); }

void gp_string_free(char* text) { std::free(text); }

gp_status gp_graph_build(int32_t order, const int32_t* edge_pairs, size_t edge_count,
                         gp_graph** out) {
    if (gp_status s = require(out && (edge_pairs || edge_count == 0), "null argument")) return s;
    return guarded([&] {
        std::vector<std::pair<int, int>> edges;
        edges.reserve(edge_count);
        for (size_t i = 0; i < edge_count; ++i)
            edges.emplace_back(edge_pairs[2 * i], edge_pairs[2 * i + 1]);
        *out = new gp_graph{Graph(order, edges)};
        return GP_OK;
    });
}

void gp_graph_free(gp_graph* graph) { delete graph; }

int32_t gp_graph_order(const gp_graph* graph) { return graph ? graph->g.order() : -1; }

int32_t gp_graph_size(const gp_graph* graph) { return graph ? graph->g.size() : -1; }

int gp_graph_has_edge(const gp_graph* graph, int32_t u, int32_t v) {
    if (!graph || u < 0 || v < 0 || u >= graph->g.order() || v >= graph->g.order()) return -1;
    return u != v && graph->g.has_edge(u, v) ? 1 : 0;
}

int gp_graph_is_connected(const gp_graph* graph) {
    return graph ? (graph->g.is_connected() ? 1 : 0) : -1;
}

gp_status gp_graph_delete_vertex(const gp_graph* graph, int32_t x, gp_graph** out,
                                 int32_t* relabel) {
    if (gp_status s = require(graph && out, "null argument")) return s;
    return guarded([&] {
        VertexDeletion del = delete_vertex(graph->g, x);
        if (relabel)
            for (size_t i = 0; i < del.relabel.size(); ++i) relabel[i] = del.relabel[i];
        *out = new gp_graph{std::move(del.graph)};
        return GP_OK;
    });
}

gp_status gp_graph_delete_edge(const gp_graph* graph, int32_t u, int32_t v, gp_graph** out) {
    if (gp_status s = require(graph && out, "null argument")) return s;
    return guarded([&] {
        *out = new gp_graph{delete_edge(graph->g, EdgeRef::make(u, v))};
        return GP_OK;
    });
}

gp_status gp_graph_from_g6(const char* text, gp_graph** out) {
    if (gp_status s = require(text && out, "null argument")) return s;
    return guarded([&] {
        *out = new gp_graph{g6_decode(text)};
        return GP_OK;
    });
}

gp_status gp_graph_to_g6(const gp_graph* graph, char** out) {
    if (gp_status s = require(graph && out, "null argument")) return s;
    return guarded([&] {
        *out = copy_string(g6_encode(graph->g));
        return GP_OK;
    });
}

gp_status gp_graph_from_edge_list(const char* text, gp_graph** out) {
    if (gp_status s = require(text && out, "null argument")) return s;
    return guarded([&] {
        *out = new gp_graph{edge_list_parse(text)};
        return GP_OK;
    });
}

gp_status gp_graph_to_edge_list(const gp_graph* graph, char** out) {
    if (gp_status s = require(graph && out, "null argument")) return s;
    return guarded([&] {
        *out = copy_string(edge_list_encode(graph->g));
        return GP_OK;
    });
}

int32_t gp_graph_distance(const gp_graph* graph, int32_t u, int32_t v) {
    if (!graph || u < 0 || v < 0 || u >= graph->g.order() || v >= graph->g.order()) return -1;
    return DistanceMatrix(graph->g).at(u, v);
}

int32_t gp_graph_diameter(const gp_graph* graph) {
    if (!graph) return -1;
    return DistanceMatrix(graph->g).diameter();
}

const char* gp_family_names(void) {
    static const std::string names = [] {
        std::string joined;
        for (const std::string& name : family_names()) {
            if (!joined.empty()) joined += ",";
            joined += name;
        }
        return joined;
    }();
    return names.c_str();
}

gp_status gp_family(const char* name, const int32_t* params, size_t param_count,
                    const gp_graph* base, gp_graph** out, char** landmarks_json) {
    if (gp_status s = require(name && out && (params || param_count == 0), "null argument"))
        return s;
    return guarded([&] {
        FamilySpec spec;
        spec.name = name;
        spec.params.assign(params, params + param_count);
        if (base) spec.base = base->g;
        FamilyResult result = generate(spec);
        if (landmarks_json) *landmarks_json = copy_string(landmarks_to_json(result.landmarks));
        *out = new gp_graph{std::move(result.graph)};
        return GP_OK;
    });
}

gp_status gp_number(const gp_graph* graph, int32_t* value, int32_t* witness,
                    int32_t* witness_len) {
    if (gp_status s = require(graph && value, "null argument")) return s;
    return guarded([&] {
        const GpCertificate cert = gp::gp_number(graph->g);
        *value = cert.value;
        emit_witness(cert.witness, witness, witness_len);
        return GP_OK;
    });
}

gp_status gp_number_forcing(const gp_graph* graph, const int32_t* required, size_t required_len,
                            int32_t* value, int32_t* witness, int32_t* witness_len) {
    if (gp_status s =
            require(graph && value && (required || required_len == 0), "null argument"))
        return s;
    return guarded([&] {
        VertexSet req(graph->g.order());
        for (size_t i = 0; i < required_len; ++i) {
            graph->g.check_vertex(required[i]);
            req.set(required[i]);
        }
        const auto cert = gp::gp_number_forcing(graph->g, req);
        if (!cert) return set_error(GP_ERR_INFEASIBLE, "required set is not in general position");
        *value = cert->value;
        emit_witness(cert->witness, witness, witness_len);
        return GP_OK;
    });
}

gp_status gp_in_some_gp_set(const gp_graph* graph, int32_t x, int* out) {
    if (gp_status s = require(graph && out, "null argument")) return s;
    return guarded([&] {
        *out = in_some_gp_set(graph->g, x) ? 1 : 0;
        return GP_OK;
    });
}

gp_status gp_is_general_position(const gp_graph* graph, const int32_t* vertices, size_t count,
                                 int* out) {
    if (gp_status s = require(graph && out && (vertices || count == 0), "null argument")) return s;
    return guarded([&] {
        VertexSet set(graph->g.order());
        for (size_t i = 0; i < count; ++i) {
            graph->g.check_vertex(vertices[i]);
            set.set(vertices[i]);
        }
        *out = is_general_position(DistanceMatrix(graph->g), set) ? 1 : 0;
        return GP_OK;
    });
}

gp_status gp_brute_force(const gp_graph* graph, int32_t* value, int32_t* witness,
                         int32_t* witness_len) {
    if (gp_status s = require(graph && value, "null argument")) return s;
    return guarded([&] {
        const GpCertificate cert = brute_force_gp(graph->g, effective_cap(kBruteForceOrderCap));
        *value = cert.value;
        emit_witness(cert.witness, witness, witness_len);
        return GP_OK;
    });
}

gp_status gp_independence_number(const gp_graph* graph, int32_t* value, int32_t* witness,
                                 int32_t* witness_len) {
    if (gp_status s = require(graph && value, "null argument")) return s;
    return guarded([&] {
        const auto [alpha, set] =
            independence_number(graph->g, effective_cap(kIndependenceOrderCap));
        *value = alpha;
        emit_witness(set, witness, witness_len);
        return GP_OK;
    });
}

int32_t gp_leaves_count(const gp_graph* graph) {
    return graph ? leaves_count(graph->g) : -1;
}

gp_status gp_isometric_path_number(const gp_graph* graph, int32_t* out) {
    if (gp_status s = require(graph && out, "null argument")) return s;
    return guarded([&] {
        *out = isometric_path_number_exact(graph->g, effective_cap(kIpOrderCap));
        return GP_OK;
    });
}

gp_status gp_vertex_scan(const gp_graph* graph, gp_render_format format, int threads, char** out) {
    if (gp_status s = require(graph && out, "null argument")) return s;
    return guarded([&] {
        const auto records = vertex_scan(graph->g, std::max(1, threads));
        *out = copy_string(format == GP_RENDER_JSON
                               ? render_scan_json(records, ScanKind::vertices)
                               : render_scan_csv(records, ScanKind::vertices));
        return GP_OK;
    });
}

gp_status gp_edge_scan(const gp_graph* graph, gp_render_format format, int threads, char** out) {
    if (gp_status s = require(graph && out, "null argument")) return s;
    return guarded([&] {
        const auto records = edge_scan(graph->g, std::max(1, threads));
        *out = copy_string(format == GP_RENDER_JSON ? render_scan_json(records, ScanKind::edges)
                                                    : render_scan_csv(records, ScanKind::edges));
        return GP_OK;
    });
}

gp_status gp_audit(const gp_audit_options* options, gp_render_format format, char** summary,
                   int64_t* violations) {
    if (gp_status s = require(options && violations, "null argument")) return s;
    return guarded([&] {
        std::vector<CorpusEntry> corpus;
        switch (options->mode) {
        case GP_AUDIT_G6_TEXT:
            if (gp_status s = require(options->g6_text, "g6 text mode needs text")) return s;
            corpus = corpus_from_g6_text(options->g6_text);
            break;
        case GP_AUDIT_RANDOM: {
            const double p = options->edge_probability > 0 ? options->edge_probability : 0.5;
            corpus = corpus_random(options->samples, options->seed, options->max_order, p);
            break;
        }
        case GP_AUDIT_PAPER_SUITE:
            corpus = corpus_paper_suite();
            break;
        default:
            return set_error(GP_ERR_INVALID_ARGUMENT, "unknown audit mode");
        }
        AuditOptions audit_options;
        audit_options.threads = std::max(1, int(options->threads));
        const AuditReport report = theorem_audit(corpus, audit_options);
        if (summary)
            *summary = copy_string(format == GP_RENDER_JSON ? report.render_json()
                                                            : report.render_text());
        *violations = report.total_violations();
        return GP_OK;
    });
}

} // extern "C"
