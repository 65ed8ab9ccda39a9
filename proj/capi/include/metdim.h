/* C interface to the metdim solver library.
 *
 * All functions are thread-safe. Graph handles are opaque and immutable;
 * results are returned as malloc'd strings (JSON documents or edge-list
 * text) that the caller releases with metdim_string_free. On failure the
 * returned status names the violated precondition and metdim_last_error()
 * carries a human-readable message for the calling thread.
 */
#ifndef METDIM_H
#define METDIM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define METDIM_API __attribute__((visibility("default")))

typedef struct metdim_graph metdim_graph;

typedef enum metdim_status {
    METDIM_OK = 0,
    METDIM_ERR_INVALID_ARGUMENT = 1,
    METDIM_ERR_PARSE = 2,
    METDIM_ERR_SELF_LOOP = 3,
    METDIM_ERR_DUPLICATE_EDGE = 4,
    METDIM_ERR_DISCONNECTED = 5,
    METDIM_ERR_TRIVIAL_GRAPH = 6,
    METDIM_ERR_SIZE_OUT_OF_RANGE = 7,
    METDIM_ERR_ORDER_OVERFLOW = 8,
    METDIM_ERR_ROOT_OUT_OF_RANGE = 9,
    METDIM_ERR_HYPOTHESIS_VIOLATED = 10,
    METDIM_ERR_UNKNOWN_FAMILY = 11,
    METDIM_ERR_INFEASIBLE = 12,
    METDIM_ERR_UNBOUNDED = 13,
    METDIM_ERR_INTERNAL = 14
} metdim_status;

METDIM_API const char* metdim_status_name(metdim_status status);

/* Message for the most recent failure on the calling thread. */
METDIM_API const char* metdim_last_error(void);

/* Builds a graph from edge-list text: first data line "n m", then m lines
 * "u v" with 0-based endpoints; '#' starts a comment line. */
METDIM_API metdim_status metdim_graph_parse(const char* edge_list_text, metdim_graph** out_graph);

/* Named families: "path" n, "cycle" n, "complete" n, "biclique" s t,
 * "star" n, "binomial" n. out_root receives the family's canonical root
 * (binomial trees are rooted at 0) or -1, and may be NULL. */
METDIM_API metdim_status metdim_graph_family(const char* name, const int* args, size_t num_args,
                                             metdim_graph** out_graph, int* out_root);

/* Hierarchical product of (outer, outer_root) and (inner, inner_root);
 * out_root receives the product's root index. */
METDIM_API metdim_status metdim_graph_product(const metdim_graph* outer, int outer_root,
                                              const metdim_graph* inner, int inner_root,
                                              metdim_graph** out_graph, int* out_root);

METDIM_API int metdim_graph_order(const metdim_graph* graph);

/* Serializes to edge-list text; root_or_negative >= 0 adds a "# root R"
 * comment line after validating the index. */
METDIM_API metdim_status metdim_graph_edge_list(const metdim_graph* graph, int root_or_negative,
                                                char** out_text);

METDIM_API void metdim_graph_free(metdim_graph* graph);

/* Exact solvers. JSON schemas:
 *   metdim_dim   {"dim": k, "basis": [v, ...]}
 *   metdim_fdim  {"dim_f": "p/q", "weights": {"0": "p/q", ...}}
 *   metdim_rdim  {"rdim": k, "basis": [v, ...]}
 *   metdim_frdim {"rdim_f": "p/q", "convention_empty_Pu": bool}
 * Rationals are canonical strings, never floats. */
METDIM_API metdim_status metdim_dim(const metdim_graph* graph, char** out_json);
METDIM_API metdim_status metdim_fdim(const metdim_graph* graph, char** out_json);
METDIM_API metdim_status metdim_rdim(const metdim_graph* graph, int root, char** out_json);
METDIM_API metdim_status metdim_frdim(const metdim_graph* graph, int root, char** out_json);

/* Runs a verification statement: one of "thm2.6", "thm3.3", "lemmas",
 * "paths", "smallgraphs", "binomial", "all". Negative seed-independent
 * parameters (trials, max_inner, max_outer) select per-statement defaults;
 * for "binomial", max_inner caps the tree index. Output is
 * {"passed": bool, "reports": [...]} and out_passed (may be NULL) receives
 * 1 exactly when no report carries a failure. */
METDIM_API metdim_status metdim_verify(const char* statement, unsigned long long seed, int trials,
                                       int max_inner, int max_outer, char** out_json,
                                       int* out_passed);

METDIM_API void metdim_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif
