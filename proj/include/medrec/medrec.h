/*
 * medrec: reconstruction of median graphs (1-skeleta of finite CAT(0) cube
 * complexes) from the pairwise distances between their combinatorial
 * boundary vertices, plus generators, boundary extraction, and auditing.
 *
 * C interface over the C++ core. Every function that can fail returns a
 * medrec_status; MEDREC_OK means success and anything else leaves a
 * human-readable explanation in medrec_last_error_message() (thread-local,
 * valid until the next failing call on the same thread). Strings returned
 * through char** out-parameters are heap copies owned by the caller; release
 * them with medrec_string_free. Graphs are opaque handles released with
 * medrec_graph_free.
 */
#ifndef MEDREC_H
#define MEDREC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct medrec_graph medrec_graph;

typedef enum medrec_status {
  MEDREC_OK = 0,
  MEDREC_ERR_INVALID_ARGUMENT,
  MEDREC_ERR_PARSE,
  MEDREC_ERR_INVALID_GRAPH,
  MEDREC_ERR_MALFORMED_MATRIX,
  MEDREC_ERR_AMBIGUOUS_COMPLETION,
  MEDREC_ERR_ISOLATED_NON_BASE,
  MEDREC_ERR_NOT_MEDIAN,
  MEDREC_ERR_NO_GATE,
  MEDREC_ERR_NOT_IN_CUBE,
  MEDREC_ERR_SIZE_MISMATCH,
  MEDREC_ERR_NOT_PERMUTATION,
  MEDREC_ERR_VERIFICATION,
  MEDREC_ERR_INTERNAL,
  MEDREC_ERR_UNKNOWN
} medrec_status;

const char* medrec_version(void);
const char* medrec_status_name(medrec_status status);
const char* medrec_last_error_message(void);

void medrec_string_free(char* s);
void medrec_graph_free(medrec_graph* g);

/* Graph JSON: {"n": int, "edges": [[u,v],...], "labels": [string,...]?}.
 * The loader rejects self-loops, duplicate or out-of-range edges,
 * disconnected graphs, and malformed label tables. */
medrec_status medrec_graph_from_json(const char* json_text, medrec_graph** out);
medrec_status medrec_graph_to_json(const medrec_graph* g, char** out);
int medrec_graph_vertex_count(const medrec_graph* g);
int medrec_graph_edge_count(const medrec_graph* g);

/* Families: hypercube, grid, tree, product, median_closure, q3_minus.
 * Identical (family, params, seed) always yields identical JSON bytes. */
medrec_status medrec_generate(const char* family, const char* params,
                              uint64_t seed, medrec_graph** out);

/* *out = 1 iff g is a median graph (unique median for every vertex triple). */
medrec_status medrec_is_median(const medrec_graph* g, int* out);

/* Cube complex of g: cells grouped by dimension with maximality flags and
 * coface counts. */
medrec_status medrec_complex_json(const medrec_graph* g, char** out);

/* mode is "facet-unique" or "dimension-based". */
medrec_status medrec_boundary_json(const medrec_graph* g, const char* mode,
                                   char** out);
/* Distance matrix CSV over the boundary vertices: header row of labels,
 * then the symmetric integer matrix. */
medrec_status medrec_boundary_csv(const medrec_graph* g, const char* mode,
                                  char** out);

/* Corner-peeling reconstruction from a boundary distance matrix. basepoint
 * may be NULL (defaults to the first label). out_trace_jsonl may be NULL;
 * otherwise it receives one JSON object per peeling step. */
medrec_status medrec_reconstruct(const char* matrix_csv, const char* basepoint,
                                 medrec_graph** out_graph,
                                 char** out_trace_jsonl);

/* Reconstructs g from its own boundary matrix and replays every step
 * against g. *out_ok = 1 iff all invariants held and the result is
 * isomorphic to g over the boundary labels; the full report lands in
 * *out_report_json. A failed audit still returns MEDREC_OK. */
medrec_status medrec_audit(const medrec_graph* g, const char* mode,
                           int* out_ok, char** out_report_json);

/* Searches for an isomorphism a -> b extending sigma_json (an object of
 * label-to-label pairs; NULL or "{}" for unconstrained). Absence of an
 * isomorphism is not an error: *out_found is set to 0. When found and
 * out_map_json is non-NULL it receives the full label map. */
medrec_status medrec_isomorphism_extending(const medrec_graph* a,
                                           const medrec_graph* b,
                                           const char* sigma_json,
                                           int* out_found, char** out_map_json);

/* The two labelings of the 3-cube minus a vertex that share a boundary
 * metric without admitting an isomorphism over it. The boundary labels of
 * the common 6-cycle are returned as a JSON array. */
medrec_status medrec_q3_minus(medrec_graph** out_odd, medrec_graph** out_even,
                              char** out_boundary_labels_json);

/* *out_equal = 1 iff the two CSV matrices agree entrywise after renaming
 * the rows of the first through perm_json (an object of label-to-label
 * pairs; NULL means match equal labels). */
medrec_status medrec_matrix_permuted_equal(const char* csv_a, const char* csv_b,
                                           const char* perm_json,
                                           int* out_equal);

#ifdef __cplusplus
}
#endif

#endif /* MEDREC_H */
