/* C interface to the haarcay library. All objects are opaque handles owned
 * by the caller and released with the matching *_free function. Strings
 * returned through `char **` out-parameters are heap allocated and must be
 * released with hc_string_free. Every function returning hc_status records a
 * message for hc_last_error on failure (per thread). */
#ifndef HAARCAY_H
#define HAARCAY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HAARCAY_BUILDING)
#    define HC_API __declspec(dllexport)
#  else
#    define HC_API __declspec(dllimport)
#  endif
#else
#  define HC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hc_group hc_group;
typedef struct hc_haar hc_haar;
typedef struct hc_graph hc_graph;

typedef enum hc_status {
  HC_OK = 0,
  HC_ERR_PARSE = 1,
  HC_ERR_INVALID_PARAMETER = 2,
  HC_ERR_INVALID_PRESENTATION = 3,
  HC_ERR_INVALID_CONNECTION_SET = 4,
  HC_ERR_NOT_BIPARTITE = 5,
  HC_ERR_INVALID_WITNESS = 6,
  HC_ERR_RESOURCE_LIMIT = 7,
  HC_ERR_INTERNAL = 8,
  HC_ERR_IO = 9,
  HC_ERR_NULL_ARGUMENT = 10,
  HC_ERR_UNKNOWN = 11
} hc_status;

typedef enum hc_verdict {
  HC_VERDICT_NO = 0,
  HC_VERDICT_YES = 1,
  HC_VERDICT_UNKNOWN = 2
} hc_verdict;

typedef enum hc_property {
  HC_PROP_CONNECTED = 0,
  HC_PROP_VERTEX_TRANSITIVE = 1,
  HC_PROP_CAYLEY = 2,
  HC_PROP_ALG_CAYLEY = 3
} hc_property;

typedef struct hc_check_options {
  uint64_t budget; /* regular-subgroup search expansions; 0 is a real budget */
  int seed_gr;     /* nonzero: seed the Cayley search with G_R */
} hc_check_options;

/* budget = library default, seed_gr = 1 */
HC_API hc_check_options hc_check_options_default(void);

HC_API const char *hc_last_error(void);
HC_API const char *hc_status_name(hc_status status);
HC_API void hc_string_free(char *s);

/* Groups ------------------------------------------------------------------- */

HC_API hc_status hc_group_parse(const char *dsl, hc_group **out);
HC_API void hc_group_free(hc_group *g);
HC_API size_t hc_group_order(const hc_group *g);
HC_API hc_status hc_group_element_name(const hc_group *g, size_t index, char **out);
/* Number of automorphisms; groups above `max_order` give HC_ERR_RESOURCE_LIMIT. */
HC_API hc_status hc_group_automorphism_count(const hc_group *g, size_t max_order, size_t *out);

/* Haar graphs -------------------------------------------------------------- */

/* "<group>|<elements>" */
HC_API hc_status hc_haar_parse(const char *spec, hc_haar **out);
HC_API void hc_haar_free(hc_haar *h);
HC_API hc_status hc_haar_describe(const hc_haar *h, char **out);
HC_API hc_status hc_haar_graph(const hc_haar *h, hc_graph **out);
HC_API hc_status hc_haar_check(const hc_haar *h, hc_property property,
                               const hc_check_options *options, hc_verdict *verdict,
                               char **detail);
/* *found is 1 with (g, alpha, sigma) in *report, or 0 with "witness: NONE". */
HC_API hc_status hc_haar_witness(const hc_haar *h, int *found, char **report);

/* "<group>|<elements>" with an inverse-closed, identity-free set */
HC_API hc_status hc_cayley_parse(const char *spec, hc_graph **out);

/* Graphs ------------------------------------------------------------------- */

HC_API hc_status hc_graph_from_graph6(const char *text, hc_graph **out);
HC_API void hc_graph_free(hc_graph *g);
HC_API size_t hc_graph_vertex_count(const hc_graph *g);
HC_API size_t hc_graph_edge_count(const hc_graph *g);
HC_API hc_status hc_graph_to_graph6(const hc_graph *g, char **out);
HC_API hc_status hc_graph_to_dot(const hc_graph *g, char **out);
/* "aut_order: N" then one "orbit: v v v" line per orbit. */
HC_API hc_status hc_graph_automorphism_report(const hc_graph *g, char **out);

/* Scans -------------------------------------------------------------------- */

typedef void (*hc_line_sink)(const char *line, void *user);

typedef struct hc_scan_options {
  size_t workers;
  int timing;
  uint64_t budget;
  const char *const *skip_keys; /* keys of records already present */
  size_t skip_count;
} hc_scan_options;

HC_API hc_scan_options hc_scan_options_default(void);

/* Each record is passed to `sink` as one line of JSON, in instance order.
 * `summary` (optional) receives the summary as JSON, `table` (optional) a
 * human-readable version. */
HC_API hc_status hc_scan_all_subsets(const char *group_dsl, int dedup,
                                     const hc_scan_options *options, hc_line_sink sink,
                                     void *user, char **summary, char **table);
HC_API hc_status hc_scan_dihedral_pattern(size_t lo, size_t hi, const hc_scan_options *options,
                                          hc_line_sink sink, void *user, char **summary,
                                          char **table);
HC_API hc_status hc_scan_prop36(size_t lo, size_t hi, const hc_scan_options *options,
                                hc_line_sink sink, void *user, char **summary, char **table);
HC_API hc_status hc_scan_gendih(const char *const *abelian_specs, size_t count,
                                size_t max_valency, const hc_scan_options *options,
                                hc_line_sink sink, void *user, char **summary, char **table);
HC_API hc_status hc_scan_closure(const char *group_dsl, const hc_scan_options *options,
                                 hc_line_sink sink, void *user, char **summary, char **table);

#ifdef __cplusplus
}
#endif

#endif
