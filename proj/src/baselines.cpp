#include "baselines.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rcd {

SymMatrix laplacian(const Graph& g, LaplacianVariant variant) {
  const int n = g.num_nodes();
  const Matrix& a = g.adjacency();
  const Vector d = a.rowwise().sum();
  switch (variant) {
    case LaplacianVariant::unnormalized: {
      Matrix l = -a;
      l.diagonal() = d;
      return SymMatrix::trusted(std::move(l));
    }
    case LaplacianVariant::sym_normalized: {
      Vector dinv_sqrt(n);
      for (int i = 0; i < n; ++i) dinv_sqrt(i) = d(i) > 0.0 ? 1.0 / std::sqrt(d(i)) : 0.0;
      Matrix l = -(dinv_sqrt * dinv_sqrt.transpose()).cwiseProduct(a);
      for (int i = 0; i < n; ++i) l(i, i) = d(i) > 0.0 ? 1.0 : 0.0;
      return SymMatrix::trusted(std::move(l));
    }
    case LaplacianVariant::random_walk_symmetrized: {
      // (L_rw + L_rw^T)/2 with L_rw = I - D^{-1} A, zero rows on isolated nodes.
      Vector dinv(n);
      for (int i = 0; i < n; ++i) dinv(i) = d(i) > 0.0 ? 1.0 / d(i) : 0.0;
      Matrix lrw = dinv.asDiagonal() * (-a);
      for (int i = 0; i < n; ++i) lrw(i, i) = d(i) > 0.0 ? 1.0 : 0.0;
      Matrix l = 0.5 * (lrw + lrw.transpose());
      return SymMatrix::trusted(std::move(l));
    }
  }
  throw std::invalid_argument("laplacian: unknown variant");
}

Matrix spectral_embedding(const Graph& g, const SpectralConfig& cfg) {
  const int n = g.num_nodes();
  if (cfg.k < 1 || cfg.k > n)
    throw std::invalid_argument("spectral_embedding: need 1 <= k <= N");
  const SymMatrix source = cfg.source == SpectralSource::adjacency
                               ? SymMatrix::trusted(g.adjacency())
                               : laplacian(g, cfg.variant);
  const EigenPairs eig = sym_eig(source);  // values descending

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (cfg.eigen_rule == EigenRule::top_abs) {
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
      return std::abs(eig.values(i)) > std::abs(eig.values(j));
    });
  } else {
    std::reverse(order.begin(), order.end());  // ascending eigenvalue
  }

  Matrix embedding(n, cfg.k);
  for (int c = 0; c < cfg.k; ++c) embedding.col(c) = eig.vectors.col(order[c]);
  return embedding;
}

ClusterAssignment cluster_embedding(const Matrix& rows, int k, int replicates,
                                    uint64_t seed) {
  std::vector<Vector> points;
  points.reserve(rows.rows());
  for (Eigen::Index i = 0; i < rows.rows(); ++i)
    points.push_back(rows.row(i).transpose());
  return kmeans(points, k, replicates, seed).assignment;
}

ClusterAssignment spectral_cluster(const Graph& g, const SpectralConfig& cfg,
                                   uint64_t seed) {
  return cluster_embedding(spectral_embedding(g, cfg), cfg.k, cfg.replicates, seed);
}

}  // namespace rcd
