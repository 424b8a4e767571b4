#include "robustcd.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <memory>
#include <string>
#include <vector>

#include "baselines.hpp"
#include "certify.hpp"
#include "clustering.hpp"
#include "gsbm.hpp"
#include "solver.hpp"
#include "sym_matrix.hpp"

namespace {

thread_local std::string g_last_error;

rcd_status fail(rcd_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

// Exceptions out of the core become status codes at this boundary.
template <typename Fn>
rcd_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return fail(RCD_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(RCD_ERR_NUMERIC, e.what());
  }
}

}  // namespace

struct rcd_graph {
  rcd::Graph graph;
  std::vector<std::string> node_ids;  // empty for generated graphs
};

struct rcd_labels {
  rcd::GroundTruth truth;  // doubles as a plain assignment vector
};

struct rcd_solution {
  rcd::Solution solution;
  rcd_mode mode;
  double lambda;  // NaN in degree-corrected mode
  double alpha;
};

extern "C" {

const char* rcd_status_message(rcd_status status) {
  switch (status) {
    case RCD_OK: return "ok";
    case RCD_ERR_NULL_ARGUMENT: return "null argument";
    case RCD_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RCD_ERR_IO: return "i/o error";
    case RCD_ERR_NUMERIC: return "numeric failure";
  }
  return "unknown status";
}

const char* rcd_last_error(void) { return g_last_error.c_str(); }

const char* rcd_version(void) { return "0.1.0"; }

rcd_status rcd_gsbm_generate(const rcd_gsbm_spec* spec, uint64_t seed,
                             rcd_graph** graph, rcd_labels** truth) {
  if (!spec || !graph || !spec->cluster_sizes || !spec->connectivity)
    return fail(RCD_ERR_NULL_ARGUMENT, "rcd_gsbm_generate: null argument");
  return guarded([&] {
    rcd::GsbmSpec s;
    s.cluster_sizes.assign(spec->cluster_sizes, spec->cluster_sizes + spec->num_clusters);
    s.connectivity.resize(spec->num_clusters, spec->num_clusters);
    for (int i = 0; i < spec->num_clusters; ++i)
      for (int j = 0; j < spec->num_clusters; ++j)
        s.connectivity(i, j) = spec->connectivity[i * spec->num_clusters + j];
    s.outliers.count = spec->num_outliers;
    switch (spec->outlier_kind) {
      case RCD_OUTLIERS_NONE: s.outliers.kind = rcd::OutlierKind::none; break;
      case RCD_OUTLIERS_DENSE_CLIQUE: s.outliers.kind = rcd::OutlierKind::dense_clique; break;
      case RCD_OUTLIERS_RANDOM_ATTACH: s.outliers.kind = rcd::OutlierKind::random_attach; break;
      case RCD_OUTLIERS_HUB: s.outliers.kind = rcd::OutlierKind::hub; break;
      case RCD_OUTLIERS_PAPER_MIX: s.outliers.kind = rcd::OutlierKind::paper_mix; break;
      default: throw std::invalid_argument("rcd_gsbm_generate: unknown outlier kind");
    }
    s.outliers.clique_density = spec->outlier_density;
    s.outliers.attach_probability = spec->attach_probability;
    s.outliers.hub_degree = spec->hub_degree;
    s.allow_nonpositive_gap = spec->allow_nonpositive_gap != 0;

    auto [g, t] = rcd::generate(s, seed);
    *graph = new rcd_graph{std::move(g), {}};
    if (truth) *truth = new rcd_labels{std::move(t)};
    return RCD_OK;
  });
}

rcd_status rcd_graph_from_adjacency(const double* adjacency, int n, rcd_graph** graph) {
  if (!adjacency || !graph)
    return fail(RCD_ERR_NULL_ARGUMENT, "rcd_graph_from_adjacency: null argument");
  return guarded([&] {
    rcd::Matrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = adjacency[static_cast<size_t>(i) * n + j];
    *graph = new rcd_graph{rcd::Graph(std::move(a)), {}};
    return RCD_OK;
  });
}

rcd_status rcd_graph_load_edge_list(const char* path, const rcd_load_options* options,
                                    rcd_graph** graph, rcd_labels** truth) {
  if (!path || !graph)
    return fail(RCD_ERR_NULL_ARGUMENT, "rcd_graph_load_edge_list: null argument");
  try {
    rcd::LoadOptions opt;
    if (options) {
      opt.largest_component = options->use_largest_component != 0;
      if (options->labels_path) opt.labels_path = options->labels_path;
    }
    rcd::LoadedGraph loaded = rcd::load_edge_list(path, opt);
    *graph = new rcd_graph{std::move(loaded.graph), std::move(loaded.node_ids)};
    if (truth) *truth = loaded.truth ? new rcd_labels{std::move(*loaded.truth)} : nullptr;
    return RCD_OK;
  } catch (const std::invalid_argument& e) {
    return fail(RCD_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(RCD_ERR_IO, e.what());
  }
}

int rcd_graph_num_nodes(const rcd_graph* g) { return g ? g->graph.num_nodes() : 0; }

int64_t rcd_graph_num_edges(const rcd_graph* g) { return g ? g->graph.num_edges() : 0; }

rcd_status rcd_graph_degrees(const rcd_graph* g, int* out) {
  if (!g || !out) return fail(RCD_ERR_NULL_ARGUMENT, "rcd_graph_degrees: null argument");
  const std::vector<int> d = g->graph.degrees();
  std::memcpy(out, d.data(), d.size() * sizeof(int));
  return RCD_OK;
}

rcd_status rcd_graph_node_id(const rcd_graph* g, int index, const char** id) {
  if (!g || !id) return fail(RCD_ERR_NULL_ARGUMENT, "rcd_graph_node_id: null argument");
  if (index < 0 || index >= g->graph.num_nodes())
    return fail(RCD_ERR_INVALID_ARGUMENT, "rcd_graph_node_id: index out of range");
  if (g->node_ids.empty()) {
    thread_local std::string buf;
    buf = std::to_string(index);
    *id = buf.c_str();
  } else {
    *id = g->node_ids[index].c_str();
  }
  return RCD_OK;
}

rcd_status rcd_graph_permute(const rcd_graph* g, const rcd_labels* truth, const int* perm,
                             rcd_graph** out_graph, rcd_labels** out_truth) {
  if (!g || !perm || !out_graph)
    return fail(RCD_ERR_NULL_ARGUMENT, "rcd_graph_permute: null argument");
  return guarded([&] {
    const int n = g->graph.num_nodes();
    std::vector<int> p(perm, perm + n);
    rcd::GroundTruth t;
    if (truth) {
      t = truth->truth;
    } else {
      t.num_clusters = 1;
      t.labels.assign(n, 1);
    }
    auto [pg, pt] = rcd::apply_permutation(g->graph, t, p);
    *out_graph = new rcd_graph{std::move(pg), {}};
    if (out_truth) *out_truth = new rcd_labels{std::move(pt)};
    return RCD_OK;
  });
}

void rcd_graph_free(rcd_graph* g) { delete g; }

rcd_status rcd_labels_create(const int* labels, int n, int num_clusters, rcd_labels** out) {
  if (!labels || !out) return fail(RCD_ERR_NULL_ARGUMENT, "rcd_labels_create: null argument");
  if (n < 1 || num_clusters < 1)
    return fail(RCD_ERR_INVALID_ARGUMENT, "rcd_labels_create: bad sizes");
  for (int i = 0; i < n; ++i)
    if (labels[i] < 1 || labels[i] > num_clusters + 1)
      return fail(RCD_ERR_INVALID_ARGUMENT,
                  "rcd_labels_create: labels must lie in 1..num_clusters+1");
  auto* l = new rcd_labels;
  l->truth.labels.assign(labels, labels + n);
  l->truth.num_clusters = num_clusters;
  *out = l;
  return RCD_OK;
}

int rcd_labels_size(const rcd_labels* l) { return l ? l->truth.size() : 0; }

int rcd_labels_num_clusters(const rcd_labels* l) { return l ? l->truth.num_clusters : 0; }

int rcd_labels_get(const rcd_labels* l, int i) {
  if (!l || i < 0 || i >= l->truth.size()) return -1;
  return l->truth.labels[i];
}

void rcd_labels_free(rcd_labels* l) { delete l; }

void rcd_solver_config_init(rcd_solver_config* cfg) {
  if (!cfg) return;
  cfg->lambda = -1.0;
  cfg->alpha = 0.0;
  cfg->rho = 1.0;
  cfg->iterations = 100;
  cfg->kmeans_replicates = 100;
  cfg->seed = 0;
  cfg->stop_tol = 0.0;
  cfg->record_history = 0;
}

rcd_status rcd_select_lambda_trimmed(const rcd_graph* g, double lo_pct, double hi_pct,
                                     double* lambda, int* degenerate) {
  if (!g || !lambda)
    return fail(RCD_ERR_NULL_ARGUMENT, "rcd_select_lambda_trimmed: null argument");
  return guarded([&] {
    const rcd::LambdaSelection sel = rcd::select_lambda_trimmed(g->graph, lo_pct, hi_pct);
    *lambda = rcd::guard_lambda(sel.lambda, g->graph.num_nodes());
    if (degenerate) *degenerate = (sel.degenerate || sel.whole_graph_fallback) ? 1 : 0;
    return RCD_OK;
  });
}

rcd_status rcd_lambda_from_pq(double p, double q, double* lambda) {
  if (!lambda) return fail(RCD_ERR_NULL_ARGUMENT, "rcd_lambda_from_pq: null argument");
  return guarded([&] {
    *lambda = rcd::lambda_from_pq(p, q);
    return RCD_OK;
  });
}

rcd_status rcd_detect_communities(const rcd_graph* g, int r, const rcd_solver_config* cfg,
                                  rcd_mode mode, rcd_labels** assignment,
                                  rcd_solution** solution) {
  if (!g || !cfg || !assignment)
    return fail(RCD_ERR_NULL_ARGUMENT, "rcd_detect_communities: null argument");
  return guarded([&] {
    rcd::SolverConfig sc;
    sc.lambda = cfg->lambda < 0.0 ? rcd::auto_lambda(g->graph) : cfg->lambda;
    sc.alpha = cfg->alpha;
    sc.rho = cfg->rho;
    sc.iterations = cfg->iterations;
    sc.record_history = cfg->record_history != 0;
    sc.stop_tol = cfg->stop_tol;
    const auto m = mode == RCD_MODE_PLAIN ? rcd::DetectMode::plain
                                          : rcd::DetectMode::degree_corrected;
    rcd::DetectResult res = rcd::detect_communities(g->graph, r, sc, m,
                                                    cfg->kmeans_replicates, cfg->seed);
    auto* l = new rcd_labels;
    l->truth.labels = std::move(res.assignment.labels);
    l->truth.num_clusters = res.assignment.num_clusters;
    *assignment = l;
    if (solution)
      *solution = new rcd_solution{std::move(res.solution), mode, res.lambda_used, sc.alpha};
    return RCD_OK;
  });
}

int rcd_solution_dim(const rcd_solution* s) { return s ? s->solution.x_hat.dim() : 0; }

double rcd_solution_residual(const rcd_solution* s) {
  return s ? s->solution.final_residual : 0.0;
}

double rcd_solution_objective(const rcd_solution* s) {
  return s ? s->solution.objective : 0.0;
}

double rcd_solution_lambda(const rcd_solution* s) {
  return s ? s->lambda : std::nan("");
}

int rcd_solution_iterations(const rcd_solution* s) {
  return s ? s->solution.iterations_run : 0;
}

int rcd_solution_history_length(const rcd_solution* s) {
  return s ? static_cast<int>(s->solution.history.size()) : 0;
}

rcd_status rcd_solution_history(const rcd_solution* s, double* residuals,
                                double* objectives) {
  if (!s) return fail(RCD_ERR_NULL_ARGUMENT, "rcd_solution_history: null argument");
  for (size_t i = 0; i < s->solution.history.size(); ++i) {
    if (residuals) residuals[i] = s->solution.history[i].residual;
    if (objectives) objectives[i] = s->solution.history[i].objective;
  }
  return RCD_OK;
}

rcd_status rcd_solution_matrix(const rcd_solution* s, double* out) {
  if (!s || !out) return fail(RCD_ERR_NULL_ARGUMENT, "rcd_solution_matrix: null argument");
  const rcd::Matrix& x = s->solution.x_hat.mat();
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      out[static_cast<size_t>(i) * x.cols() + j] = x(i, j);
  return RCD_OK;
}

void rcd_solution_free(rcd_solution* s) { delete s; }

rcd_status rcd_spectral_cluster(const rcd_graph* g, rcd_spectral_source source,
                                rcd_laplacian_variant variant, rcd_eigen_rule rule, int k,
                                int replicates, uint64_t seed, rcd_labels** assignment) {
  if (!g || !assignment)
    return fail(RCD_ERR_NULL_ARGUMENT, "rcd_spectral_cluster: null argument");
  return guarded([&] {
    rcd::SpectralConfig cfg;
    cfg.source = source == RCD_SPECTRAL_ADJACENCY ? rcd::SpectralSource::adjacency
                                                  : rcd::SpectralSource::laplacian;
    switch (variant) {
      case RCD_LAPLACIAN_UNNORMALIZED:
        cfg.variant = rcd::LaplacianVariant::unnormalized; break;
      case RCD_LAPLACIAN_SYM_NORMALIZED:
        cfg.variant = rcd::LaplacianVariant::sym_normalized; break;
      case RCD_LAPLACIAN_RW_SYMMETRIZED:
        cfg.variant = rcd::LaplacianVariant::random_walk_symmetrized; break;
      default: throw std::invalid_argument("rcd_spectral_cluster: unknown variant");
    }
    cfg.eigen_rule = rule == RCD_EIGEN_SMALLEST ? rcd::EigenRule::smallest
                                                : rcd::EigenRule::top_abs;
    cfg.k = k;
    cfg.replicates = replicates;
    rcd::ClusterAssignment a = rcd::spectral_cluster(g->graph, cfg, seed);
    auto* l = new rcd_labels;
    l->truth.labels = std::move(a.labels);
    l->truth.num_clusters = a.num_clusters;
    *assignment = l;
    return RCD_OK;
  });
}

rcd_status rcd_misclassification_pairs(const rcd_labels* truth, const rcd_labels* est,
                                       double* rate) {
  if (!truth || !est || !rate)
    return fail(RCD_ERR_NULL_ARGUMENT, "rcd_misclassification_pairs: null argument");
  return guarded([&] {
    rcd::ClusterAssignment a{est->truth.labels, est->truth.num_clusters};
    *rate = rcd::misclassification_pairs(truth->truth, a);
    return RCD_OK;
  });
}

rcd_status rcd_misclassification_matched(const rcd_labels* truth, const rcd_labels* est,
                                         rcd_scope scope, double* rate) {
  if (!truth || !est || !rate)
    return fail(RCD_ERR_NULL_ARGUMENT, "rcd_misclassification_matched: null argument");
  return guarded([&] {
    rcd::ClusterAssignment a{est->truth.labels, est->truth.num_clusters};
    *rate = rcd::misclassification_matched(
        truth->truth, a,
        scope == RCD_SCOPE_ALL ? rcd::MetricScope::all : rcd::MetricScope::inliers);
    return RCD_OK;
  });
}

rcd_status rcd_certify_feasibility(const rcd_solution* s, double tol,
                                   rcd_feasibility_report* report) {
  if (!s || !report)
    return fail(RCD_ERR_NULL_ARGUMENT, "rcd_certify_feasibility: null argument");
  return guarded([&] {
    const rcd::FeasibilityReport r = rcd::feasibility_check(s->solution.x_hat, tol);
    report->min_eigenvalue = r.min_eigenvalue;
    report->min_entry = r.min_entry;
    report->max_entry = r.max_entry;
    report->pass = r.pass ? 1 : 0;
    return RCD_OK;
  });
}

rcd_status rcd_certify_block_form(const rcd_solution* s, const rcd_labels* truth,
                                  double tol, rcd_block_form_report* report) {
  if (!s || !truth || !report)
    return fail(RCD_ERR_NULL_ARGUMENT, "rcd_certify_block_form: null argument");
  return guarded([&] {
    const rcd::BlockFormReport r =
        rcd::check_block_form(s->solution.x_hat, truth->truth, tol);
    report->max_in_block_deficit = r.max_in_block_deficit;
    report->max_cross_block_excess = r.max_cross_block_excess;
    report->pass = r.pass ? 1 : 0;
    return RCD_OK;
  });
}

rcd_status rcd_certify_objective_gap(const rcd_solution* s, const rcd_graph* g,
                                     const rcd_labels* truth, double* gap) {
  if (!s || !g || !truth || !gap)
    return fail(RCD_ERR_NULL_ARGUMENT, "rcd_certify_objective_gap: null argument");
  return guarded([&] {
    const rcd::SymMatrix e = s->mode == RCD_MODE_PLAIN
                                 ? rcd::build_e(g->graph, s->lambda, s->alpha)
                                 : rcd::build_e_degree_corrected(g->graph);
    *gap = rcd::objective_gap(s->solution.x_hat, e, truth->truth);
    return RCD_OK;
  });
}

double rcd_kmeans_bound(int r, int m, int n) { return rcd::kmeans_bound(r, m, n); }

}  // extern "C"
