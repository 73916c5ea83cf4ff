/* Minimal C consumer of the cheegerlab API, compiled and run by the
 * `header_compiles_and_links_from_c` test when a C compiler is around.
 * Exits 0 if every call agrees with the known values for K4. */

#include <stdio.h>
#include <string.h>

#include "cheegerlab.h"

static int expect(int condition, const char *what) {
  if (!condition) {
    const char *why = cheegerlab_last_error_message();
    fprintf(stderr, "FAILED: %s (%s)\n", what, why ? why : "no error message");
    return 1;
  }
  return 0;
}

int main(void) {
  int bad = 0;

  CheegerlabGraph *graph = NULL;
  CheegerlabStatus status =
      cheegerlab_graph_parse("n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n", &graph);
  bad += expect(status == CHEEGERLAB_STATUS_OK, "parse K4");
  bad += expect(cheegerlab_graph_vertex_count(graph) == 4, "vertex count");
  bad += expect(cheegerlab_graph_is_connected(graph), "connectivity");

  int64_t num = 0, den = 0;
  bad += expect(cheegerlab_q(graph, &num, &den) == CHEEGERLAB_STATUS_OK, "Q");
  bad += expect(num == 2 && den == 3, "Q = 2/3");

  double lambda_max = 0.0;
  bad += expect(cheegerlab_lambda_max(graph, 0.0, &lambda_max) ==
                    CHEEGERLAB_STATUS_OK,
                "lambda_max");
  bad += expect(lambda_max > 4.0 / 3.0 - 1e-9 && lambda_max < 4.0 / 3.0 + 1e-9,
                "lambda_max = 4/3");

  char *json = NULL;
  bad += expect(cheegerlab_report_json(graph, 0.0, &json) ==
                    CHEEGERLAB_STATUS_OK,
                "report");
  bad += expect(json != NULL && strstr(json, "\"all_pass\":true") != NULL,
                "report passes");
  cheegerlab_string_free(json);

  bad += expect(cheegerlab_graph_parse("0 0\n", &graph) ==
                    CHEEGERLAB_STATUS_INVALID_GRAPH,
                "loop rejected");
  bad += expect(strstr(cheegerlab_last_error_message(), "LoopEdge") != NULL,
                "loop diagnostic");

  cheegerlab_graph_free(graph);
  return bad == 0 ? 0 : 1;
}
