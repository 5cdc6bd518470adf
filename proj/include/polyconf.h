#ifndef POLYCONF_H
#define POLYCONF_H

/* C interface to the polyconf exact-arithmetic configuration library.
 *
 * All functions return a polyconf_status; on failure polyconf_last_error()
 * carries a message for the calling thread. Objects are opaque handles
 * released with their _free function. Strings and byte buffers returned
 * through output parameters are heap-allocated and must be released with
 * polyconf_string_free / polyconf_bytes_free.
 *
 * Regions and windows are inclusive per-axis ranges written "a..b,c..d";
 * a single range broadcasts to every axis. Analysis results are returned as
 * JSON documents with deterministic key order.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum polyconf_status {
    POLYCONF_OK = 0,
    POLYCONF_ERROR_INVALID_ARGUMENT = 1, /* malformed input or bad usage */
    POLYCONF_ERROR_PARSE = 2,            /* polynomial or descriptor syntax */
    POLYCONF_ERROR_DOMAIN = 3,           /* mathematical precondition violated */
    POLYCONF_ERROR_INCONSISTENT = 4,     /* internal consistency trap fired */
    POLYCONF_ERROR_OVERFLOW = 5,
    POLYCONF_ERROR_INTERNAL = 6
} polyconf_status;

typedef struct polyconf_poly polyconf_poly;
typedef struct polyconf_config polyconf_config;

const char* polyconf_version(void);

/* Message of the last failing call on this thread. */
const char* polyconf_last_error(void);

void polyconf_string_free(char* s);
void polyconf_bytes_free(unsigned char* p);

/* ------------------------------------------------------------------ */
/* Laurent polynomials                                                 */

polyconf_status polyconf_poly_parse(const char* text, int dim, polyconf_poly** out);
void polyconf_poly_free(polyconf_poly* f);
polyconf_status polyconf_poly_to_string(const polyconf_poly* f, char** out);

/* ------------------------------------------------------------------ */
/* Configurations                                                      */

polyconf_status polyconf_config_from_json(const char* json_text, polyconf_config** out);
polyconf_status polyconf_config_builtin(const char* name, polyconf_config** out);
void polyconf_config_free(polyconf_config* c);
polyconf_status polyconf_config_dim(const polyconf_config* c, int* out);
/* "full_lattice_periodic" | "fiber_periodic_finite" | "oracle_only" */
polyconf_status polyconf_config_exactness(const polyconf_config* c, char** out);
polyconf_status polyconf_config_descriptor(const polyconf_config* c, char** json_out);
/* decimal string of the coefficient at the given point */
polyconf_status polyconf_config_coefficient(const polyconf_config* c, const int64_t* point,
                                            int dim, char** value_out);
polyconf_status polyconf_config_window_json(const polyconf_config* c, const char* box,
                                            char** json_out);

/* JSON list of the cells of a built-in demo shape (e.g. "tshape"). */
polyconf_status polyconf_builtin_shape_json(const char* name, char** json_out);

/* ------------------------------------------------------------------ */
/* Analyses. Each returns a JSON report; coarse outcomes also come back
 * through plain ints so callers need not parse JSON for control flow.  */

/* verdict_kind: 0 proven zero, 1 zero on region, 2 nonzero (witness in JSON) */
polyconf_status polyconf_verify_json(const polyconf_poly* f, const polyconf_config* c,
                                     const char* region, int* verdict_kind, char** json_out);

polyconf_status polyconf_scan_json(const polyconf_config* c, int64_t max_m, int64_t max_n,
                                   const char* region, char** json_out);
polyconf_status polyconf_scan_tsv(const polyconf_config* c, int64_t max_m, int64_t max_n,
                                  const char* region, char** out);

/* Kernel-based annihilator search over the pattern shape given as a box
 * (e.g. "0..2,0..2"). found = 0 and an explanatory JSON when the kernel is
 * trivial. */
polyconf_status polyconf_find_annihilator_json(const polyconf_config* c, const char* shape_box,
                                               const char* region, int* found, char** json_out);

polyconf_status polyconf_find_difference_product_json(const polyconf_config* c, int64_t max_norm,
                                                      int max_factors, const char* region,
                                                      int* found, char** json_out);

/* Runs find_difference_product and classifies the result.
 * kind: 0 doubly periodic, 1 one-periodic, 2 non-periodic evidence. */
polyconf_status polyconf_classify_json(const polyconf_config* c, int64_t max_norm, int max_factors,
                                       int64_t bound, const char* region, int* found, int* kind,
                                       char** json_out);

polyconf_status polyconf_decompose_json(const polyconf_config* c,
                                        const polyconf_poly* const* factors, size_t n_factors,
                                        const char* window, int with_dumps, char** json_out);

/* tile_json: {"dim":d,"cells":[[..],...]}; cotiler_json: {"dim":d,"basis":[[..],...]}.
 * tiles: 1 when the pair tiles, 0 otherwise. The report includes the cover
 * check, the identity deviation, and prime periods when |tile| is prime. */
polyconf_status polyconf_tile_check_json(const char* tile_json, const char* cotiler_json,
                                         int* tiles, char** json_out);

/* Lines of block_m x block_n blocks along the direction vector (length dim),
 * with per-line distinct-block counts and the greedy disjoint-family size. */
polyconf_status polyconf_block_lines_json(const polyconf_config* c, const int64_t* direction,
                                          int dim, int64_t block_m, int64_t block_n,
                                          const char* region, char** json_out);

polyconf_status polyconf_render_ascii(const polyconf_config* c, const char* region,
                                      char** grid_out, char** legend_out);
/* bytes_out is a complete binary PPM (P6) file; sidecar_json_out records the
 * value-to-gray mapping. */
polyconf_status polyconf_render_ppm(const polyconf_config* c, const char* region,
                                    unsigned char** bytes_out, size_t* len_out,
                                    char** sidecar_json_out);

#ifdef __cplusplus
}
#endif

#endif /* POLYCONF_H */
