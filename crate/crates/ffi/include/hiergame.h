#ifndef HIERGAME_H
#define HIERGAME_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every call.
typedef enum HgStatus {
  HG_STATUS_OK = 0,
  // A parameter is out of range; see the last error message.
  HG_STATUS_INVALID_ARGUMENT = 1,
  // A required pointer was null.
  HG_STATUS_NULL_POINTER = 2,
  // The requested quantity does not exist (e.g. parallel payoff lines).
  HG_STATUS_UNDEFINED = 3,
  // The simulator could not finish a round.
  HG_STATUS_SIMULATION_FAILED = 4,
  // An internal error was caught at the boundary.
  HG_STATUS_PANIC = 5,
} HgStatus;

typedef enum HgVariant {
  HG_VARIANT_MULTI_LEADER = 0,
  HG_VARIANT_RETRY = 1,
  HG_VARIANT_NO_MEMORY = 2,
  HG_VARIANT_WITH_MEMORY = 3,
} HgVariant;

typedef enum HgRole {
  HG_ROLE_COOPERATOR = 0,
  HG_ROLE_DEFECTOR = 1,
} HgRole;

// Opaque directed graph under construction.
typedef struct HgGraph HgGraph;

// Monte Carlo payoff estimate: `mean = a_hat * c + b_hat * b`.
typedef struct HgEstimate {
  double mean;
  double std_error;
  double a_hat;
  double b_hat;
} HgEstimate;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the last failure on this thread, or an empty string.
// The pointer stays valid until the next failing call on the same thread.
const char *hg_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *hg_version(void);

// Closed-form hierarchicalness `H_n(x)` of a two-level structure.
//
// # Safety
// `out` must be null or valid for writing one `double`.
enum HgStatus hg_h_nx(size_t n, size_t x, double *out);

// Exact expected payoff of a focal status cooperator.
//
// # Safety
// `out` must be null or valid for writing one `double`.
enum HgStatus hg_wc(enum HgVariant variant,
                    size_t n,
                    double fc,
                    double tau,
                    double c,
                    double b,
                    double *out);

// Exact expected payoff of a focal defector.
//
// # Safety
// `out` must be null or valid for writing one `double`.
enum HgStatus hg_wd(enum HgVariant variant,
                    size_t n,
                    double fc,
                    double tau,
                    double c,
                    double b,
                    double *out);

// The `c/b` at which `W(C) = W(D)`; [`HgStatus::Undefined`] when the
// payoff lines are parallel.
//
// # Safety
// `out` must be null or valid for writing one `double`.
enum HgStatus hg_equilibrium_cb(enum HgVariant variant,
                                size_t n,
                                double fc,
                                double tau,
                                double *out);

// Lower and upper bound of the stability region of `c/b`.
//
// # Safety
// `lower` and `upper` must be null or valid for writing one `double` each.
enum HgStatus hg_stability_region(enum HgVariant variant,
                                  size_t n,
                                  double tau,
                                  double *lower,
                                  double *upper);

// Seeded Monte Carlo estimate of a focal player's payoff over
// `replications` rounds. Identical arguments give identical results.
//
// # Safety
// `out` must be null or valid for writing one `HgEstimate`.
enum HgStatus hg_estimate_payoff(enum HgVariant variant,
                                 enum HgRole role,
                                 size_t n,
                                 double fc,
                                 double tau,
                                 double c,
                                 double b,
                                 uint64_t replications,
                                 uint64_t seed,
                                 struct HgEstimate *out);

// Creates an empty graph on `node_count` nodes.
//
// # Safety
// `out` must be null or valid for writing one pointer. The handle must be
// released with [`hg_graph_free`].
enum HgStatus hg_graph_new(size_t node_count, struct HgGraph **out);

// Adds the edge `from -> to`. Out-of-range nodes, self-loops and duplicate
// edges are rejected and leave the graph unchanged.
//
// # Safety
// `graph` must be null or a live handle from [`hg_graph_new`].
enum HgStatus hg_graph_add_edge(struct HgGraph *graph, size_t from, size_t to);

// General reaching centrality of the graph.
//
// # Safety
// `graph` must be null or a live handle; `out` must be null or valid for
// writing one `double`.
enum HgStatus hg_graph_grc(const struct HgGraph *graph, double *out);

// Releases a graph handle. Null is ignored.
//
// # Safety
// `graph` must be null or a handle from [`hg_graph_new`] that has not been
// freed yet.
void hg_graph_free(struct HgGraph *graph);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HIERGAME_H */
