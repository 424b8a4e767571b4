#pragma once

#include <cstdint>
#include <vector>

#include "gsbm.hpp"
#include "solver.hpp"
#include "sym_matrix.hpp"

namespace rcd {

struct ClusterAssignment {
  std::vector<int> labels;  // values in 1..num_clusters
  int num_clusters = 0;
};

struct KmeansResult {
  ClusterAssignment assignment;
  Matrix centroids;  // k rows
  double objective;  // sum of squared distances to assigned centroids
};

// Column vectors of X scaled to unit 2-norm; negative roundoff (>= -1e-8)
// is clamped to zero first, and an all-zero column maps to e_1.
std::vector<Vector> normalize_columns(const SymMatrix& x);

// Lloyd's algorithm with k-means++ seeding and `replicates` independent
// restarts; returns the best objective (ties broken by replicate index).
// Ties in assignment go to the lowest centroid index; an emptied cluster is
// reseeded with the point farthest from its centroid.
// `trace`, when given, receives the per-iteration objective of every
// replicate (outer index = replicate).
KmeansResult kmeans(const std::vector<Vector>& points, int k, int replicates,
                    uint64_t seed, std::vector<std::vector<double>>* trace = nullptr);

enum class DetectMode { plain, degree_corrected };

struct DetectResult {
  ClusterAssignment assignment;
  Solution solution;
  double lambda_used;  // NaN in degree-corrected mode
};

// Two-step pipeline: solve the SDP for X_hat, then k-means with k = r on the
// normalized columns. cfg.lambda must already be resolved (see auto_lambda).
DetectResult detect_communities(const Graph& g, int r, const SolverConfig& cfg,
                                DetectMode mode, int kmeans_replicates, uint64_t seed);

// Trimmed-degree density heuristic with the degenerate guard applied.
double auto_lambda(const Graph& g);

// Pair-based misclassification among inliers: the maximum number p of
// disjoint inlier pairs with different true labels but equal estimated
// labels, divided by the number of inliers. For one estimated cluster with
// inlier true-label counts c_1 >= c_2 >= ... the maximum is
// min(floor(sum/2), sum - c_1).
double misclassification_pairs(const GroundTruth& truth, const ClusterAssignment& est);

enum class MetricScope { inliers, all };

// Minimum over label bijections of the fraction of mismatched nodes in
// scope. With scope == all, outliers count as one extra true class.
double misclassification_matched(const GroundTruth& truth, const ClusterAssignment& est,
                                 MetricScope scope);

}  // namespace rcd
