#pragma once

#include "gsbm.hpp"
#include "sym_matrix.hpp"

namespace rcd {

struct FeasibilityReport {
  double min_eigenvalue;
  double min_entry;
  double max_entry;
  bool pass;  // min_eig >= -tol*N and entries within [-tol, 1+tol]
};

FeasibilityReport feasibility_check(const SymMatrix& x, double tol);

struct BlockFormReport {
  bool pass;
  double max_in_block_deficit;     // max over within-cluster inlier entries of 1 - X_ij
  double max_cross_block_excess;   // max over cross-cluster inlier entries of X_ij
};

// Does X match the ideal solved pattern: within-cluster inlier entries 1,
// cross-cluster inlier entries 0, outlier rows unconstrained.
BlockFormReport check_block_form(const SymMatrix& x, const GroundTruth& truth, double tol);

// All-ones blocks on the inlier clusters, zero everywhere an outlier is
// involved. Feasible by construction (PSD, entries in [0,1]).
SymMatrix truth_block_matrix(const GroundTruth& truth);

// <X_hat, E> minus the best objective among the feasible comparators
// {0, J, truth_block_matrix}. A correct solver keeps this <= 1e-6 * N.
double objective_gap(const SymMatrix& x_hat, const SymMatrix& e, const GroundTruth& truth);

// Misclassification bound (2r+3) * m / n; meaningful when m < n_min/(2r+4).
double kmeans_bound(int r, int m, int n);

}  // namespace rcd
