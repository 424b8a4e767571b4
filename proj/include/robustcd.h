/* robustcd: robust community detection under the generalized stochastic
 * block model. C interface over the C++ core: opaque handles, status-code
 * returns, caller-owned output pointers released with the matching *_free.
 *
 * Every function that can fail returns rcd_status; on failure outputs are
 * untouched and rcd_last_error() carries a human-readable detail string
 * (thread local).
 */
#ifndef ROBUSTCD_H
#define ROBUSTCD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RCD_API __declspec(dllexport)
#else
#define RCD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rcd_status {
  RCD_OK = 0,
  RCD_ERR_NULL_ARGUMENT = 1,
  RCD_ERR_INVALID_ARGUMENT = 2,
  RCD_ERR_IO = 3,
  RCD_ERR_NUMERIC = 4
} rcd_status;

RCD_API const char* rcd_status_message(rcd_status status);
RCD_API const char* rcd_last_error(void);
RCD_API const char* rcd_version(void);

typedef struct rcd_graph rcd_graph;
typedef struct rcd_labels rcd_labels;
typedef struct rcd_solution rcd_solution;

/* ---- GSBM generation ---------------------------------------------------- */

typedef enum rcd_outlier_kind {
  RCD_OUTLIERS_NONE = 0,
  RCD_OUTLIERS_DENSE_CLIQUE = 1,  /* Bernoulli block among the outliers      */
  RCD_OUTLIERS_RANDOM_ATTACH = 2, /* Bernoulli columns toward the inliers    */
  RCD_OUTLIERS_HUB = 3,           /* expected-degree hubs                    */
  RCD_OUTLIERS_PAPER_MIX = 4      /* dense outlier block plus squared-uniform
                                     per-row attachment rates                */
} rcd_outlier_kind;

typedef struct rcd_gsbm_spec {
  int num_clusters;           /* r >= 1 */
  const int* cluster_sizes;   /* r entries, all >= 1 */
  const double* connectivity; /* r*r row-major symmetric, entries in [0,1] */
  int num_outliers;
  rcd_outlier_kind outlier_kind;
  double outlier_density;     /* dense_clique / paper_mix */
  double attach_probability;  /* random_attach */
  int hub_degree;             /* hub */
  int allow_nonpositive_gap;  /* accept min within-density <= max cross-density */
} rcd_gsbm_spec;

/* Fills *graph and *truth (truth may be NULL if not wanted). Labels are
 * 1..r for inliers and r+1 for outliers, in block order. */
RCD_API rcd_status rcd_gsbm_generate(const rcd_gsbm_spec* spec, uint64_t seed,
                                     rcd_graph** graph, rcd_labels** truth);

/* ---- Graphs -------------------------------------------------------------- */

/* Build a graph from a dense row-major 0/1 adjacency (symmetric, zero
 * diagonal). */
RCD_API rcd_status rcd_graph_from_adjacency(const double* adjacency, int n,
                                            rcd_graph** graph);

typedef struct rcd_load_options {
  int use_largest_component;
  const char* labels_path; /* NULL or empty = no labels */
} rcd_load_options;

/* Edge list: "id id" per line, '#' comments; duplicates collapsed, self
 * loops dropped, direction ignored. *truth is filled only when a labels
 * path was given (pass NULL to discard). */
RCD_API rcd_status rcd_graph_load_edge_list(const char* path,
                                            const rcd_load_options* options,
                                            rcd_graph** graph, rcd_labels** truth);

RCD_API int rcd_graph_num_nodes(const rcd_graph* g);
RCD_API int64_t rcd_graph_num_edges(const rcd_graph* g);
RCD_API rcd_status rcd_graph_degrees(const rcd_graph* g, int* out /* n entries */);
/* Original node id for a loaded graph ("0","1",... for generated graphs). */
RCD_API rcd_status rcd_graph_node_id(const rcd_graph* g, int index, const char** id);
/* Relabel node i to perm[i]; adjacency is conjugated, labels relocated. */
RCD_API rcd_status rcd_graph_permute(const rcd_graph* g, const rcd_labels* truth,
                                     const int* perm, rcd_graph** out_graph,
                                     rcd_labels** out_truth);
RCD_API void rcd_graph_free(rcd_graph* g);

/* ---- Label vectors ------------------------------------------------------- */

RCD_API rcd_status rcd_labels_create(const int* labels, int n, int num_clusters,
                                     rcd_labels** out);
RCD_API int rcd_labels_size(const rcd_labels* l);
RCD_API int rcd_labels_num_clusters(const rcd_labels* l);
RCD_API int rcd_labels_get(const rcd_labels* l, int i);
RCD_API void rcd_labels_free(rcd_labels* l);

/* ---- Solver -------------------------------------------------------------- */

typedef struct rcd_solver_config {
  double lambda;         /* in (0,1); negative = trimmed-degree auto selection */
  double alpha;          /* trace penalty */
  double rho;            /* augmented-Lagrangian weight */
  int iterations;
  int kmeans_replicates;
  uint64_t seed;         /* drives k-means restarts */
  double stop_tol;       /* <= 0: fixed iteration count */
  int record_history;
} rcd_solver_config;

/* lambda=-1, alpha=0, rho=1, iterations=100, kmeans_replicates=100,
 * seed=0, stop_tol=0, record_history=0. */
RCD_API void rcd_solver_config_init(rcd_solver_config* cfg);

typedef enum rcd_mode { RCD_MODE_PLAIN = 0, RCD_MODE_DEGREE_CORRECTED = 1 } rcd_mode;

/* Trimmed-degree density heuristic. *degenerate (optional) is set when the
 * raw estimate was 0 or 1 or the trim fell back to the whole graph; the
 * returned lambda is already clamped into [1/N, 1-1/N]. */
RCD_API rcd_status rcd_select_lambda_trimmed(const rcd_graph* g, double lo_pct,
                                             double hi_pct, double* lambda,
                                             int* degenerate);

/* Likelihood-derived threshold for densities 0 < q < p < 1. */
RCD_API rcd_status rcd_lambda_from_pq(double p, double q, double* lambda);

/* Solve the SDP relaxation and cluster the normalized solution columns with
 * k-means (k = r). *solution may be NULL when only labels are wanted. */
RCD_API rcd_status rcd_detect_communities(const rcd_graph* g, int r,
                                          const rcd_solver_config* cfg, rcd_mode mode,
                                          rcd_labels** assignment,
                                          rcd_solution** solution);

RCD_API int rcd_solution_dim(const rcd_solution* s);
RCD_API double rcd_solution_residual(const rcd_solution* s);  /* ||Y-Z||_F */
RCD_API double rcd_solution_objective(const rcd_solution* s); /* <X_hat, E> */
RCD_API double rcd_solution_lambda(const rcd_solution* s); /* NaN if degree-corrected */
RCD_API int rcd_solution_iterations(const rcd_solution* s);
RCD_API int rcd_solution_history_length(const rcd_solution* s);
RCD_API rcd_status rcd_solution_history(const rcd_solution* s, double* residuals,
                                        double* objectives);
/* Copies X_hat into out (dim*dim row-major). */
RCD_API rcd_status rcd_solution_matrix(const rcd_solution* s, double* out);
RCD_API void rcd_solution_free(rcd_solution* s);

/* ---- Spectral baselines -------------------------------------------------- */

typedef enum rcd_spectral_source {
  RCD_SPECTRAL_ADJACENCY = 0,
  RCD_SPECTRAL_LAPLACIAN = 1
} rcd_spectral_source;

typedef enum rcd_laplacian_variant {
  RCD_LAPLACIAN_UNNORMALIZED = 0,
  RCD_LAPLACIAN_SYM_NORMALIZED = 1,
  RCD_LAPLACIAN_RW_SYMMETRIZED = 2
} rcd_laplacian_variant;

typedef enum rcd_eigen_rule {
  RCD_EIGEN_TOP_ABS = 0, /* largest |eigenvalue| */
  RCD_EIGEN_SMALLEST = 1
} rcd_eigen_rule;

RCD_API rcd_status rcd_spectral_cluster(const rcd_graph* g, rcd_spectral_source source,
                                        rcd_laplacian_variant variant,
                                        rcd_eigen_rule rule, int k, int replicates,
                                        uint64_t seed, rcd_labels** assignment);

/* ---- Metrics & certification --------------------------------------------- */

typedef enum rcd_scope { RCD_SCOPE_INLIERS = 0, RCD_SCOPE_ALL = 1 } rcd_scope;

/* Pair-based misclassification rate among inliers. */
RCD_API rcd_status rcd_misclassification_pairs(const rcd_labels* truth,
                                               const rcd_labels* est, double* rate);
/* Minimum mismatch fraction over label bijections. */
RCD_API rcd_status rcd_misclassification_matched(const rcd_labels* truth,
                                                 const rcd_labels* est, rcd_scope scope,
                                                 double* rate);

typedef struct rcd_feasibility_report {
  double min_eigenvalue;
  double min_entry;
  double max_entry;
  int pass;
} rcd_feasibility_report;

RCD_API rcd_status rcd_certify_feasibility(const rcd_solution* s, double tol,
                                           rcd_feasibility_report* report);

typedef struct rcd_block_form_report {
  double max_in_block_deficit;
  double max_cross_block_excess;
  int pass;
} rcd_block_form_report;

RCD_API rcd_status rcd_certify_block_form(const rcd_solution* s, const rcd_labels* truth,
                                          double tol, rcd_block_form_report* report);

/* <X_hat, E> minus the best comparator objective among {0, all-ones,
 * ground-truth block matrix}; E is rebuilt from the solve parameters stored
 * in the solution, so g must be the solved graph. */
RCD_API rcd_status rcd_certify_objective_gap(const rcd_solution* s, const rcd_graph* g,
                                             const rcd_labels* truth, double* gap);

/* Misclassification bound (2r+3)m/n. */
RCD_API double rcd_kmeans_bound(int r, int m, int n);

#ifdef __cplusplus
}
#endif

#endif /* ROBUSTCD_H */
