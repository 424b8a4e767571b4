#include "clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "prng.hpp"

namespace rcd {

std::vector<Vector> normalize_columns(const SymMatrix& x) {
  const int n = x.dim();
  if (x.mat().minCoeff() < -1e-8)
    throw std::invalid_argument("normalize_columns: entries below -1e-8");
  std::vector<Vector> out;
  out.reserve(n);
  for (int j = 0; j < n; ++j) {
    Vector col = x.mat().col(j).cwiseMax(0.0);
    const double norm = col.norm();
    if (norm == 0.0) {
      col.setZero();
      col(0) = 1.0;
    } else {
      col /= norm;
    }
    out.push_back(std::move(col));
  }
  return out;
}

namespace {

struct LloydRun {
  std::vector<int> labels;  // 0-based
  Matrix centroids;
  double objective;
  std::vector<double> objectives;  // per iteration
};

// Squared distances from every point (rows of pts) to centroid c.
void sq_dist_to(const Matrix& pts, const Eigen::RowVectorXd& c, Vector& out) {
  out = (pts.rowwise() - c).rowwise().squaredNorm();
}

LloydRun lloyd(const Matrix& pts, int k, SeqRng& rng) {
  const auto n = pts.rows();
  const auto dim = pts.cols();

  // k-means++ seeding.
  Matrix centroids(k, dim);
  Vector min_sq = Vector::Constant(n, std::numeric_limits<double>::infinity());
  Vector d2(n);
  centroids.row(0) = pts.row(static_cast<Eigen::Index>(rng.below(n)));
  for (int c = 1; c < k; ++c) {
    sq_dist_to(pts, centroids.row(c - 1), d2);
    min_sq = min_sq.cwiseMin(d2);
    const double total = min_sq.sum();
    Eigen::Index pick = 0;
    if (total > 0.0) {
      double target = rng.uniform01() * total, acc = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        acc += min_sq(i);
        if (acc >= target) {
          pick = i;
          break;
        }
      }
    } else {
      pick = static_cast<Eigen::Index>(rng.below(n));  // all points coincide
    }
    centroids.row(c) = pts.row(pick);
  }

  std::vector<int> labels(n, 0);
  std::vector<double> objectives;
  Matrix dist(n, k);
  constexpr int kMaxIters = 200;
  for (int it = 0; it < kMaxIters; ++it) {
    for (int c = 0; c < k; ++c) {
      sq_dist_to(pts, centroids.row(c), d2);
      dist.col(c) = d2;
    }
    bool changed = false;
    double obj = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      int best = 0;
      double bd = dist(i, 0);
      for (int c = 1; c < k; ++c)
        if (dist(i, c) < bd) {  // strict: ties keep the lowest index
          bd = dist(i, c);
          best = c;
        }
      obj += bd;
      if (labels[i] != best) {
        labels[i] = best;
        changed = true;
      }
    }

    // Reseed emptied clusters with the farthest point.
    std::vector<Eigen::Index> counts(k, 0);
    for (Eigen::Index i = 0; i < n; ++i) ++counts[labels[i]];
    for (int c = 0; c < k; ++c) {
      if (counts[c] > 0) continue;
      Eigen::Index far = 0;
      double fd = -1.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        const double di = dist(i, labels[i]);
        if (di > fd && counts[labels[i]] > 1) {
          fd = di;
          far = i;
        }
      }
      obj -= dist(far, labels[far]);
      --counts[labels[far]];
      labels[far] = c;
      counts[c] = 1;
      changed = true;
    }

    objectives.push_back(obj);
    if (!changed && it > 0) break;

    centroids.setZero();
    for (Eigen::Index i = 0; i < n; ++i) centroids.row(labels[i]) += pts.row(i);
    for (int c = 0; c < k; ++c)
      if (counts[c] > 0) centroids.row(c) /= static_cast<double>(counts[c]);
  }

  // Report the objective of the returned (labels, centroids) pair exactly.
  double final_obj = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    final_obj += (pts.row(i) - centroids.row(labels[i])).squaredNorm();
  return {std::move(labels), std::move(centroids), final_obj, std::move(objectives)};
}

}  // namespace

KmeansResult kmeans(const std::vector<Vector>& points, int k, int replicates,
                    uint64_t seed, std::vector<std::vector<double>>* trace) {
  if (k < 1) throw std::invalid_argument("kmeans: k must be >= 1");
  const auto n = static_cast<Eigen::Index>(points.size());
  if (n < k) throw std::invalid_argument("kmeans: fewer points than clusters");
  if (replicates < 1) throw std::invalid_argument("kmeans: replicates must be >= 1");

  const auto dim = points[0].size();
  Matrix pts(n, dim);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (points[i].size() != dim)
      throw std::invalid_argument("kmeans: inconsistent point dimensions");
    pts.row(i) = points[i].transpose();
  }

  LloydRun best;
  best.objective = std::numeric_limits<double>::infinity();
  for (int rep = 0; rep < replicates; ++rep) {
    SeqRng rng(mix64(mix64(seed) ^ static_cast<uint64_t>(rep)));
    LloydRun run = lloyd(pts, k, rng);
    if (trace) trace->push_back(run.objectives);
    if (run.objective < best.objective) best = std::move(run);
  }

  KmeansResult out{{std::vector<int>(n), k}, std::move(best.centroids), best.objective};
  for (Eigen::Index i = 0; i < n; ++i) out.assignment.labels[i] = best.labels[i] + 1;
  return out;
}

double auto_lambda(const Graph& g) {
  const LambdaSelection sel = select_lambda_trimmed(g);
  return guard_lambda(sel.lambda, g.num_nodes());
}

DetectResult detect_communities(const Graph& g, int r, const SolverConfig& cfg,
                                DetectMode mode, int kmeans_replicates, uint64_t seed) {
  if (r < 1) throw std::invalid_argument("detect_communities: r must be >= 1");
  const SymMatrix e = mode == DetectMode::plain
                          ? build_e(g, cfg.lambda, cfg.alpha)
                          : build_e_degree_corrected(g);
  Solution sol = admm_solve(e, cfg);
  const std::vector<Vector> cols = normalize_columns(clamp01(sol.x_hat));
  KmeansResult km = kmeans(cols, r, kmeans_replicates, seed);
  const double lambda_used =
      mode == DetectMode::plain ? cfg.lambda : std::numeric_limits<double>::quiet_NaN();
  return {std::move(km.assignment), std::move(sol), lambda_used};
}

double misclassification_pairs(const GroundTruth& truth, const ClusterAssignment& est) {
  if (truth.size() != static_cast<int>(est.labels.size()))
    throw std::invalid_argument("misclassification_pairs: length mismatch");
  const int r = truth.num_clusters;
  const int n_inliers = truth.num_inliers();
  if (n_inliers == 0) return 0.0;

  const int k = est.num_clusters;
  // counts[c][t]: inliers with estimated label c+1 and true label t+1.
  std::vector<std::vector<int64_t>> counts(k, std::vector<int64_t>(r, 0));
  for (int i = 0; i < truth.size(); ++i) {
    if (truth.is_outlier(i)) continue;
    const int c = est.labels[i] - 1;
    if (c < 0 || c >= k)
      throw std::invalid_argument("misclassification_pairs: estimated label out of range");
    counts[c][truth.labels[i] - 1]++;
  }

  int64_t p = 0;
  for (int c = 0; c < k; ++c) {
    int64_t total = 0, cmax = 0;
    for (int t = 0; t < r; ++t) {
      total += counts[c][t];
      cmax = std::max(cmax, counts[c][t]);
    }
    p += std::min(total / 2, total - cmax);
  }
  return static_cast<double>(p) / n_inliers;
}

double misclassification_matched(const GroundTruth& truth, const ClusterAssignment& est,
                                 MetricScope scope) {
  if (truth.size() != static_cast<int>(est.labels.size()))
    throw std::invalid_argument("misclassification_matched: length mismatch");
  const bool all = scope == MetricScope::all;
  const int true_classes = truth.num_clusters + (all ? 1 : 0);
  const int k = std::max(est.num_clusters, true_classes);
  if (k > 10)
    throw std::invalid_argument("misclassification_matched: more than 10 labels");

  // Confusion counts padded to a k x k square so a plain permutation scan
  // covers unequal label sets.
  std::vector<std::vector<int64_t>> confusion(k, std::vector<int64_t>(k, 0));
  int64_t in_scope = 0;
  for (int i = 0; i < truth.size(); ++i) {
    if (!all && truth.is_outlier(i)) continue;
    const int e = est.labels[i] - 1;
    if (e < 0 || e >= est.num_clusters)
      throw std::invalid_argument("misclassification_matched: estimated label out of range");
    ++in_scope;
    confusion[truth.labels[i] - 1][e]++;
  }
  if (in_scope == 0) return 0.0;

  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  int64_t best = 0;
  do {
    int64_t matched = 0;
    for (int c = 0; c < k; ++c) matched += confusion[perm[c]][c];
    best = std::max(best, matched);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return 1.0 - static_cast<double>(best) / in_scope;
}

}  // namespace rcd
