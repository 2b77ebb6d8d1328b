/* amekit — stabiliser toolkit for AME-state codes and pentagon networks.
 *
 * C interface over the core library: opaque handles, status codes, and
 * malloc'd strings released through amekit_string_free. Every function
 * returns AMEKIT_OK on success; on failure the handle outputs are left
 * untouched and amekit_last_error() describes the problem (thread-local).
 */
#ifndef AMEKIT_H
#define AMEKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum amekit_status {
  AMEKIT_OK = 0,
  AMEKIT_ERR_INVALID_ARGUMENT = 1,
  AMEKIT_ERR_PARSE = 2,
  AMEKIT_ERR_SHAPE = 3,
  AMEKIT_ERR_CONTRADICTION = 4,
  AMEKIT_ERR_ENTANGLED = 5,
  AMEKIT_ERR_NOT_AME = 6,
  AMEKIT_ERR_UNSUPPORTED = 7,
  AMEKIT_ERR_LIMIT = 8,
  AMEKIT_ERR_INTERNAL = 9
} amekit_status;

typedef enum amekit_format {
  AMEKIT_FORMAT_TEXT = 0,
  AMEKIT_FORMAT_JSON = 1,
  AMEKIT_FORMAT_CSV = 2
} amekit_format;

typedef struct amekit_table amekit_table;
typedef struct amekit_code amekit_code;
typedef struct amekit_network amekit_network;

const char *amekit_last_error(void);

void amekit_string_free(char *s);
void amekit_table_free(amekit_table *t);
void amekit_code_free(amekit_code *c);
void amekit_network_free(amekit_network *n);

/* --- stabiliser tables ------------------------------------------------- */

/* Parses table text (d=<p> n=<N> header, one Pauli string per row). */
amekit_status amekit_table_parse(const char *text, amekit_table **out);

/* Accepts table text or an adjacency matrix; the latter yields its graph
 * state. */
amekit_status amekit_state_parse(const char *text, amekit_table **out);

amekit_status amekit_table_render(const amekit_table *t, amekit_format fmt,
                                  char **out);
amekit_status amekit_table_shape(const amekit_table *t, int *dim, int *n_qudits);

/* --- AME verification and code extraction ------------------------------ */

/* result is 1 when every floor(N/2)-qudit reduction is maximally mixed.
 * When it is 0 and witness is non-NULL, *witness lists a failing region
 * as 1-based indices. */
amekit_status amekit_is_ame(const amekit_table *t, int *result, char **witness);

/* output_qudits holds m 1-based indices; their order fixes the logical
 * slot numbering. */
amekit_status amekit_extract_code(const amekit_table *t,
                                  const int *output_qudits, size_t m,
                                  amekit_code **out);
amekit_status amekit_code_render(const amekit_code *c, amekit_format fmt,
                                 char **out);

/* --- entanglement swapping --------------------------------------------- */

/* pairs holds 1-based (left, right) indices flattened; the right state must
 * be AME. With sample = 0 every outcome is postselected to +1; otherwise
 * outcomes are drawn from the seeded generator. */
amekit_status amekit_entanglement_swap(const amekit_table *left,
                                       const amekit_table *right,
                                       const int *pairs, size_t n_pairs,
                                       int sample, uint64_t seed,
                                       amekit_table **out);

/* --- pentagon networks -------------------------------------------------- */

amekit_status amekit_network_build(int layers, amekit_network **out);
amekit_status amekit_network_parse(const char *json_text, amekit_network **out);
amekit_status amekit_network_render(const amekit_network *n, char **out);
amekit_status amekit_network_shape(const amekit_network *n, int *dim,
                                   int *boundary_legs, int *logical_legs);

/* Boundary code of the contracted network. */
amekit_status amekit_network_code(const amekit_network *n, amekit_code **out);

/* Named 6-qubit input states: "ame", "ghz", "singlet", "product". */
amekit_status amekit_input_family(const char *name, amekit_table **out);

/* Boundary state with the input encoded into the logical slots. */
amekit_status amekit_network_boundary_state(const amekit_network *n,
                                            const amekit_table *input,
                                            amekit_table **out);

/* Boundary image of a single-qudit operator at a 1-based logical slot. */
amekit_status amekit_spread(const amekit_network *n, int slot, const char *op,
                            char **out);

/* --- entropy ------------------------------------------------------------ */

/* b holds 1-based qudit indices of the region. */
amekit_status amekit_stabilizer_entropy(const amekit_table *t, const int *b,
                                        size_t n_b, double *bits);

/* Reports for regions {s_B..boundary} over s_B in [sb_min, sb_max], for the
 * comma-separated input families. */
amekit_status amekit_entropy_scan(const amekit_network *n, const char *families,
                                  int sb_min, int sb_max, amekit_format fmt,
                                  char **out);

#ifdef __cplusplus
}
#endif

#endif /* AMEKIT_H */
