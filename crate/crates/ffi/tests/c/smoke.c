/* Exercises the C API end to end; exits nonzero on the first failure. */
#include <math.h>
#include <stdio.h>
#include <string.h>

#include "hiergame.h"

#define CHECK(cond)                                                    \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "check failed at line %d: %s\n", __LINE__, #cond); \
      return 1;                                                        \
    }                                                                  \
  } while (0)

int main(void) {
  double h = 0.0;
  CHECK(hg_h_nx(5, 2, &h) == HG_STATUS_OK);
  CHECK(fabs(h - 0.5625) < 1e-12);

  double cb = 0.0;
  CHECK(hg_equilibrium_cb(HG_VARIANT_MULTI_LEADER, 2, 0.3, 0.0, &cb) == HG_STATUS_OK);
  CHECK(fabs(cb - 0.5) < 1e-12);

  double lower = 0.0, upper = 0.0;
  CHECK(hg_stability_region(HG_VARIANT_MULTI_LEADER, 2, 0.0, &lower, &upper) == HG_STATUS_OK);
  CHECK(fabs(lower - 0.5) < 1e-12 && fabs(upper - 0.75) < 1e-12);

  HgGraph *graph = NULL;
  CHECK(hg_graph_new(3, &graph) == HG_STATUS_OK);
  CHECK(hg_graph_add_edge(graph, 0, 1) == HG_STATUS_OK);
  CHECK(hg_graph_add_edge(graph, 0, 2) == HG_STATUS_OK);
  CHECK(hg_graph_add_edge(graph, 0, 0) == HG_STATUS_INVALID_ARGUMENT);
  CHECK(strlen(hg_last_error_message()) > 0);
  double grc = 0.0;
  CHECK(hg_graph_grc(graph, &grc) == HG_STATUS_OK);
  CHECK(fabs(grc - 1.0) < 1e-12);
  hg_graph_free(graph);

  HgEstimate est;
  CHECK(hg_estimate_payoff(HG_VARIANT_MULTI_LEADER, HG_ROLE_DEFECTOR, 4, 0.0, 0.0, 0.2, 1.0,
                           1000, 1, &est) == HG_STATUS_OK);
  CHECK(est.mean == 0.2 && est.std_error == 0.0);

  printf("ok %s\n", hg_version());
  return 0;
}
