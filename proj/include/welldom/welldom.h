/* C interface to the welldom library.
 *
 * Graphs are opaque handles. Every call returns a wd_status; on failure the
 * message for the calling thread is available from wd_last_error(). Strings
 * returned through `char** out` are owned by the caller and must be released
 * with wd_string_free(). */
#ifndef WELLDOM_WELLDOM_H
#define WELLDOM_WELLDOM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define WD_API __declspec(dllexport)
#else
#define WD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wd_status {
  WD_OK = 0,
  WD_ASSERTION_FAILED = 1, /* a cross-check or expectation did not hold */
  WD_ERR_PARSE = 2,
  WD_ERR_RESOURCE = 3, /* enumeration budget exceeded */
  WD_ERR_DOMAIN = 4,   /* invalid argument or precondition */
  WD_ERR_INTERNAL = 5
} wd_status;

typedef enum wd_format { WD_FORMAT_EDGELIST = 0, WD_FORMAT_GRAPH6 = 1 } wd_format;

typedef struct wd_graph wd_graph;

/* Enumeration limits. Zero fields keep the library default. */
typedef struct wd_budget {
  int32_t max_order;
  uint64_t max_sets;
} wd_budget;

typedef struct wd_proptest_config {
  int32_t count;
  int32_t max_n;
  uint64_t seed;
  const int32_t* forbidden; /* cycle lengths, may be NULL when n_forbidden == 0 */
  size_t n_forbidden;
  int32_t connected_only;
} wd_proptest_config;

WD_API const char* wd_version(void);
WD_API const char* wd_last_error(void);
WD_API void wd_string_free(char* s);

WD_API wd_status wd_graph_parse(const char* text, size_t len, wd_format format, wd_graph** out);
WD_API wd_status wd_graph_from_edges(int32_t order, const int32_t* endpoints, size_t n_edges,
                                     wd_graph** out);
WD_API void wd_graph_free(wd_graph* g);
WD_API int32_t wd_graph_order(const wd_graph* g);
WD_API int32_t wd_graph_size(const wd_graph* g);
WD_API wd_status wd_graph_serialize(const wd_graph* g, wd_format format, char** out);

/* Budget precedence: non-NULL argument > WELLDOM_BUDGET > defaults. */

/* Full analysis report. WD_ASSERTION_FAILED when a cross-check disagrees
 * (the report is still written). */
WD_API wd_status wd_analyze(const wd_graph* g, const wd_budget* budget, char** json_out);
/* Weight spaces: characterization, oracle, and their agreement. */
WD_API wd_status wd_wcw(const wd_graph* g, const wd_budget* budget, char** json_out);
WD_API wd_status wd_wwd(const wd_graph* g, const wd_budget* budget, char** json_out);
/* Exhaustive enumeration results. */
WD_API wd_status wd_oracle(const wd_graph* g, const wd_budget* budget, char** json_out);

/* Lists builtin fixtures; with run != 0 also evaluates every expectation and
 * returns WD_ASSERTION_FAILED if any fails. */
WD_API wd_status wd_fixtures(int run, char** json_out);
/* Serializes a builtin fixture's graph. */
WD_API wd_status wd_fixture_graph(const char* name, wd_graph** out);

WD_API wd_status wd_proptest(const wd_proptest_config* config, const wd_budget* budget,
                             char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* WELLDOM_WELLDOM_H */
