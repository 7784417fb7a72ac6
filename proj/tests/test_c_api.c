/* Exercises the C interface from plain C. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "welldom/welldom.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static wd_graph* parse(const char* text, wd_format f) {
  wd_graph* g = NULL;
  EXPECT(wd_graph_parse(text, strlen(text), f, &g) == WD_OK);
  return g;
}

int main(void) {
  const char* c7 = "7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n";
  wd_graph* g = parse(c7, WD_FORMAT_EDGELIST);
  EXPECT(wd_graph_order(g) == 7);
  EXPECT(wd_graph_size(g) == 7);

  char* text = NULL;
  EXPECT(wd_graph_serialize(g, WD_FORMAT_GRAPH6, &text) == WD_OK);
  EXPECT(text && strcmp(text, "FhCKG") == 0);
  wd_string_free(text);

  char* json = NULL;
  EXPECT(wd_analyze(g, NULL, &json) == WD_OK);
  EXPECT(json && strncmp(json, "{\n  \"schema_version\": 1,", 24) == 0);
  EXPECT(json && strstr(json, "\"well_dominated\": true") != NULL);
  wd_string_free(json);

  json = NULL;
  EXPECT(wd_oracle(g, NULL, &json) == WD_OK);
  EXPECT(json && strstr(json, "\"gamma\": 3") != NULL);
  wd_string_free(json);

  json = NULL;
  EXPECT(wd_wwd(g, NULL, &json) == WD_OK);
  EXPECT(json && strstr(json, "\"1/1\"") != NULL);
  wd_string_free(json);

  /* a budget below the order is a resource error, not a truncated answer */
  wd_budget small = {5, 0};
  json = NULL;
  EXPECT(wd_oracle(g, &small, &json) == WD_ERR_RESOURCE);
  EXPECT(json == NULL);
  EXPECT(strlen(wd_last_error()) > 0);
  wd_graph_free(g);

  /* parse errors */
  wd_graph* bad = NULL;
  EXPECT(wd_graph_parse("3\n0 3\n", 6, WD_FORMAT_EDGELIST, &bad) == WD_ERR_PARSE);
  EXPECT(bad == NULL);
  EXPECT(strstr(wd_last_error(), "line 2") != NULL);
  EXPECT(wd_graph_parse("F", 1, WD_FORMAT_GRAPH6, &bad) == WD_ERR_PARSE);
  EXPECT(wd_graph_parse(NULL, 0, WD_FORMAT_EDGELIST, &bad) == WD_ERR_DOMAIN);
  EXPECT(wd_graph_parse(c7, strlen(c7), (wd_format)7, &bad) == WD_ERR_DOMAIN);

  /* NULL handles */
  EXPECT(wd_graph_order(NULL) == -1);
  EXPECT(wd_analyze(NULL, NULL, &json) == WD_ERR_DOMAIN);
  wd_graph_free(NULL);
  wd_string_free(NULL);

  /* edges from arrays */
  int32_t k33[] = {0, 3, 0, 4, 0, 5, 1, 3, 1, 4, 1, 5, 2, 3, 2, 4, 2, 5};
  wd_graph* h = NULL;
  EXPECT(wd_graph_from_edges(6, k33, 9, &h) == WD_OK);
  json = NULL;
  EXPECT(wd_analyze(h, NULL, &json) == WD_OK);
  EXPECT(json && strstr(json, "\"well_covered\": true") != NULL);
  EXPECT(json && strstr(json, "\"well_dominated\": false") != NULL);
  wd_string_free(json);
  wd_graph_free(h);
  int32_t loop[] = {1, 1};
  EXPECT(wd_graph_from_edges(3, loop, 1, &h) == WD_ERR_DOMAIN);

  /* fixtures */
  json = NULL;
  EXPECT(wd_fixtures(1, &json) == WD_OK);
  EXPECT(json && strstr(json, "two-c6") != NULL);
  wd_string_free(json);
  wd_graph* t10 = NULL;
  EXPECT(wd_fixture_graph("t10", &t10) == WD_OK);
  EXPECT(wd_graph_order(t10) == 10);
  wd_graph_free(t10);
  EXPECT(wd_fixture_graph("nope", &t10) == WD_ERR_DOMAIN);

  /* property run */
  int32_t forbid[] = {4, 5, 6};
  wd_proptest_config cfg = {40, 9, 3, forbid, 3, 1};
  json = NULL;
  EXPECT(wd_proptest(&cfg, NULL, &json) == WD_OK);
  EXPECT(json && strstr(json, "wwd_matches_oracle") != NULL);
  wd_string_free(json);

  EXPECT(strlen(wd_version()) > 0);

  if (failures) {
    fprintf(stderr, "%d C API check(s) failed\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}
