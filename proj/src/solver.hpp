#pragma once

#include <functional>
#include <vector>

#include "gsbm.hpp"
#include "sym_matrix.hpp"

namespace rcd {

struct SolverConfig {
  double lambda = 0.5;  // (0, 1)
  double alpha = 0.0;   // trace penalty, >= 0
  double rho = 1.0;     // augmented-Lagrangian weight, > 0
  int iterations = 100;
  bool record_history = false;
  double stop_tol = 0.0;  // > 0 enables early stop on ||Y - Z||_F < stop_tol

  void validate() const;  // throws std::invalid_argument
};

struct IterationStats {
  double residual;   // ||Y - Z||_F
  double objective;  // <Y, E>
};

struct Solution {
  SymMatrix x_hat;    // final Y iterate (PSD within roundoff)
  SymMatrix z_final;  // final Z iterate (box-exact diagnostic)
  double final_residual = 0.0;
  double objective = 0.0;
  int iterations_run = 0;
  std::vector<IterationStats> history;  // empty unless recorded
};

// E = alpha*I - (1-lambda)*A + lambda*(J - I - A): diagonal exactly alpha,
// off-diagonal -(1-lambda) on edges and +lambda on non-edges.
SymMatrix build_e(const Graph& g, double lambda, double alpha);

// Degree-corrected penalty with D = Diag(A*1)/N:
//   E = -(I-D)^{1/2} A (I-D)^{1/2} + D^{1/2} (J - I - A) D^{1/2}.
SymMatrix build_e_degree_corrected(const Graph& g);

struct LambdaSelection {
  double lambda = 0.0;
  int nodes_kept = 0;
  bool whole_graph_fallback = false;  // fewer than 2 moderate-degree nodes
  bool degenerate = false;            // density came out 0 or 1
};

// Edge density of the subgraph on moderate-degree nodes: drop nodes whose
// degree lies strictly above the hi_pct or strictly below the lo_pct
// nearest-rank percentile of the degree sequence.
LambdaSelection select_lambda_trimmed(const Graph& g, double lo_pct = 0.2,
                                      double hi_pct = 0.8);

// Clamp a degenerate density estimate into [1/N, 1 - 1/N].
double guard_lambda(double lambda, int n);

// Likelihood-derived threshold for a two-density model, 0 < q < p < 1:
//   lambda = log((1-q)/(1-p)) / (log(p/q) + log((1-q)/(1-p)));
// always lies strictly between q and p.
double lambda_from_pq(double p, double q);

// Called after each full iteration; used by tests to watch the iterates.
using AdmmObserver =
    std::function<void(int iter, const Matrix& y, const Matrix& z, const Matrix& mult)>;

// Alternating-direction augmented-Lagrangian iteration for
//   min <X, E>  s.t.  X PSD, 0 <= X_ij <= 1.
// Splitting X into a PSD iterate Y and a box iterate Z with multiplier M:
//   Y <- (Z - M - E/rho)_+ ;  Z <- clip(Y + M, 0, 1);  M <- M + Y - Z,
// starting from Z = M = 0. The returned X_hat is the final Y.
Solution admm_solve(const SymMatrix& e, const SolverConfig& cfg,
                    const AdmmObserver& observer = {});

}  // namespace rcd
