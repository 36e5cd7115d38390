#ifndef STRINGCONE_STRINGCONE_H
#define STRINGCONE_STRINGCONE_H

/* C interface to the string cone library. Every returned string is owned by
 * the caller and released with sc_string_free. Functions report failures
 * through sc_status; sc_last_error() describes the most recent failure on the
 * calling thread as "[stage] message". */

#include <stddef.h>

#if defined(SC_BUILDING_LIBRARY)
#define SC_API __attribute__((visibility("default")))
#else
#define SC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_INVALID_ARGUMENT = 1,
  SC_UNSUPPORTED = 2,
  SC_CAP_EXCEEDED = 3,
  SC_UNBOUNDED = 4,
  SC_CHECK_FAILED = 5,
  SC_INTERNAL = 6
} sc_status;

typedef struct sc_config sc_config;

SC_API sc_config* sc_config_new(void);
SC_API void sc_config_free(sc_config* config);

/* type is one of "A".."G"; rank must match a supported root system */
SC_API sc_status sc_config_set_type(sc_config* config, const char* type, int rank);
/* comma-separated letters, e.g. "1,2,1"; defaults to the canonical w0 word */
SC_API sc_status sc_config_set_word(sc_config* config, const char* word);
/* comma-separated fundamental coordinates, must be dominant */
SC_API sc_status sc_config_set_lambda(sc_config* config, const char* lambda);
/* reduced word of a Weyl group element; "" is the identity */
SC_API sc_status sc_config_set_demazure(sc_config* config, const char* word);
SC_API sc_status sc_config_set_level_bound(sc_config* config, int level_bound);
SC_API sc_status sc_config_set_node_cap(sc_config* config, size_t cap);
SC_API sc_status sc_config_set_threads(sc_config* config, int threads);
SC_API sc_status sc_config_set_timings(sc_config* config, int enabled);

/* Checks the settings against each other: the word is a reduced word of w0,
 * the Demazure word is reduced, lambda has rank entries. Runs call this too. */
SC_API sc_status sc_config_validate(const sc_config* config);

/* Crystal graph dump of B(lambda). */
SC_API sc_status sc_run_crystal(const sc_config* config, char** dump);

/* String polytope at lambda: homogenized H-representation in dimension N + 1
 * (first coordinate homogenizing) and the lattice points, one per line. */
SC_API sc_status sc_run_polytope(const sc_config* config, char** hrep, char** points);

/* Inferred weighted string cone: H-representation, rays, and JSON summary. */
SC_API sc_status sc_run_cone(const sc_config* config, char** hrep, char** rays, char** json);

/* Degeneration report JSON. *passing is 1 iff every check holds; the status
 * is SC_CHECK_FAILED when a check fails (the report is still returned). */
SC_API sc_status sc_run_degenerate(const sc_config* config, char** json, int* passing);

/* Acceptance suite report, one line per criterion. */
SC_API sc_status sc_run_verify(const sc_config* config, char** report, int* all_passed);

SC_API const char* sc_last_error(void);
SC_API void sc_string_free(char* s);
SC_API const char* sc_version(void);

#ifdef __cplusplus
}
#endif

#endif
