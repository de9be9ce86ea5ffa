#ifndef GPKIT_GP_H
#define GPKIT_GP_H

/* C interface to the general position toolkit.
 *
 * Graphs are opaque handles; every fallible function returns a gp_status and
 * leaves a human-readable detail in gp_last_error() (thread-local, valid
 * until the next failing call on the same thread). Strings returned through
 * out-parameters are heap-allocated and must be released with
 * gp_string_free().
 *
 * Distances and diameters use the sentinel convention of the toolkit: the
 * value `order` means unreachable/disconnected, since no finite hop count in
 * an n-vertex graph can reach n.
 *
 * The environment variable GP_MAX_N, when set, lowers (never raises) the
 * order caps of the exact oracles (brute force 20, independence 40,
 * isometric paths 10).
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GP_API __declspec(dllexport)
#else
#define GP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gp_graph gp_graph;

typedef enum gp_status {
    GP_OK = 0,
    GP_ERR_INVALID_ARGUMENT = 1,
    GP_ERR_PARSE = 2,
    GP_ERR_CAP_EXCEEDED = 3,
    GP_ERR_INFEASIBLE = 4,
    GP_ERR_INTERNAL = 5
} gp_status;

typedef enum gp_render_format { GP_RENDER_CSV = 0, GP_RENDER_JSON = 1 } gp_render_format;

GP_API const char* gp_version(void);
GP_API const char* gp_status_name(gp_status status);
GP_API const char* gp_last_error(void);
GP_API void gp_string_free(char* text);

/* --- graph lifecycle ----------------------------------------------------- */

/* edge_pairs holds edge_count (u, v) pairs, flattened. */
GP_API gp_status gp_graph_build(int32_t order, const int32_t* edge_pairs, size_t edge_count,
                                gp_graph** out);
GP_API void gp_graph_free(gp_graph* graph);
GP_API int32_t gp_graph_order(const gp_graph* graph);
GP_API int32_t gp_graph_size(const gp_graph* graph);
/* 1, 0, or -1 on invalid arguments. */
GP_API int gp_graph_has_edge(const gp_graph* graph, int32_t u, int32_t v);
GP_API int gp_graph_is_connected(const gp_graph* graph);

/* relabel (optional) receives `order` entries mapping old labels to new
 * ones, -1 for the deleted vertex. */
GP_API gp_status gp_graph_delete_vertex(const gp_graph* graph, int32_t x, gp_graph** out,
                                        int32_t* relabel);
GP_API gp_status gp_graph_delete_edge(const gp_graph* graph, int32_t u, int32_t v, gp_graph** out);

/* --- codecs --------------------------------------------------------------- */

GP_API gp_status gp_graph_from_g6(const char* text, gp_graph** out);
GP_API gp_status gp_graph_to_g6(const gp_graph* graph, char** out);
GP_API gp_status gp_graph_from_edge_list(const char* text, gp_graph** out);
GP_API gp_status gp_graph_to_edge_list(const gp_graph* graph, char** out);

/* --- metric --------------------------------------------------------------- */

/* Hop distance, `order` when unreachable, -1 on invalid arguments. */
GP_API int32_t gp_graph_distance(const gp_graph* graph, int32_t u, int32_t v);
/* Diameter, `order` when disconnected, -1 on invalid arguments. */
GP_API int32_t gp_graph_diameter(const gp_graph* graph);

/* --- families ------------------------------------------------------------- */

/* Comma-separated list of generator names. */
GP_API const char* gp_family_names(void);
/* base is consulted only by cone_over_mis and must be NULL otherwise.
 * landmarks_json (optional) receives {"vertices": {...}, "edges": {...}}. */
GP_API gp_status gp_family(const char* name, const int32_t* params, size_t param_count,
                           const gp_graph* base, gp_graph** out, char** landmarks_json);

/* --- general position solvers --------------------------------------------- */

/* witness (optional) needs room for `order` entries; *witness_len receives
 * the used length. Witnesses are the lexicographically smallest maximum
 * sets. */
GP_API gp_status gp_number(const gp_graph* graph, int32_t* value, int32_t* witness,
                           int32_t* witness_len);
/* GP_ERR_INFEASIBLE when `required` itself is not in general position. */
GP_API gp_status gp_number_forcing(const gp_graph* graph, const int32_t* required,
                                   size_t required_len, int32_t* value, int32_t* witness,
                                   int32_t* witness_len);
GP_API gp_status gp_in_some_gp_set(const gp_graph* graph, int32_t x, int* out);
GP_API gp_status gp_is_general_position(const gp_graph* graph, const int32_t* vertices,
                                        size_t count, int* out);
GP_API gp_status gp_brute_force(const gp_graph* graph, int32_t* value, int32_t* witness,
                                int32_t* witness_len);
GP_API gp_status gp_independence_number(const gp_graph* graph, int32_t* value, int32_t* witness,
                                        int32_t* witness_len);
GP_API int32_t gp_leaves_count(const gp_graph* graph);
GP_API gp_status gp_isometric_path_number(const gp_graph* graph, int32_t* out);

/* --- deletion scans -------------------------------------------------------- */

/* Rendered rows in the fixed schema: element, gp_before, gp_after,
 * diam_before, diam_after, connected_after, in_some_gp_set, then one column
 * per theorem flag. threads <= 0 selects single-worker. */
GP_API gp_status gp_vertex_scan(const gp_graph* graph, gp_render_format format, int threads,
                                char** out);
GP_API gp_status gp_edge_scan(const gp_graph* graph, gp_render_format format, int threads,
                              char** out);

/* --- theorem audit ---------------------------------------------------------- */

typedef enum gp_audit_mode {
    GP_AUDIT_G6_TEXT = 0,    /* g6_text: one graph6 line per graph */
    GP_AUDIT_RANDOM = 1,     /* samples, seed, max_order, edge_probability */
    GP_AUDIT_PAPER_SUITE = 2 /* every acceptance-table family */
} gp_audit_mode;

typedef struct gp_audit_options {
    gp_audit_mode mode;
    const char* g6_text;
    int32_t samples;
    uint64_t seed;
    int32_t max_order;
    double edge_probability; /* <= 0 selects the default 0.5 */
    int32_t threads;         /* <= 0 selects single-worker */
} gp_audit_options;

/* summary (optional) receives the rendered report; *violations the number of
 * violated theorem instances (0 = clean audit). */
GP_API gp_status gp_audit(const gp_audit_options* options, gp_render_format format, char** summary,
                          int64_t* violations);

#ifdef __cplusplus
}
#endif

#endif /* GPKIT_GP_H */
