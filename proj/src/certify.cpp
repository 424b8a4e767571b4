#include "certify.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcd {

FeasibilityReport feasibility_check(const SymMatrix& x, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("feasibility_check: tol must be > 0");
  FeasibilityReport r{};
  r.min_eigenvalue = min_eigenvalue(x);
  r.min_entry = x.mat().minCoeff();
  r.max_entry = x.mat().maxCoeff();
  r.pass = r.min_eigenvalue >= -tol * x.dim() && r.min_entry >= -tol &&
           r.max_entry <= 1.0 + tol;
  return r;
}

BlockFormReport check_block_form(const SymMatrix& x, const GroundTruth& truth, double tol) {
  const int n = x.dim();
  if (n != truth.size())
    throw std::invalid_argument("check_block_form: dimension mismatch");
  double deficit = 0.0, excess = 0.0;
  for (int i = 0; i < n; ++i) {
    if (truth.is_outlier(i)) continue;
    for (int j = i; j < n; ++j) {
      if (truth.is_outlier(j)) continue;
      if (truth.labels[i] == truth.labels[j])
        deficit = std::max(deficit, 1.0 - x(i, j));
      else
        excess = std::max(excess, x(i, j));
    }
  }
  return {deficit <= tol && excess <= tol, deficit, excess};
}

SymMatrix truth_block_matrix(const GroundTruth& truth) {
  const int n = truth.size();
  Matrix x = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (truth.is_outlier(i)) continue;
    for (int j = 0; j < n; ++j)
      if (!truth.is_outlier(j) && truth.labels[i] == truth.labels[j]) x(i, j) = 1.0;
  }
  return SymMatrix::trusted(std::move(x));
}

double objective_gap(const SymMatrix& x_hat, const SymMatrix& e, const GroundTruth& truth) {
  if (x_hat.dim() != e.dim() || x_hat.dim() != truth.size())
    throw std::invalid_argument("objective_gap: dimension mismatch");
  const double obj_zero = 0.0;
  const double obj_ones = e.mat().sum();
  const double obj_block = inner(truth_block_matrix(truth), e);
  const double best = std::min({obj_zero, obj_ones, obj_block});
  return inner(x_hat, e) - best;
}

double kmeans_bound(int r, int m, int n) {
  if (n < 1) throw std::invalid_argument("kmeans_bound: n must be >= 1");
  if (r < 1 || m < 0) throw std::invalid_argument("kmeans_bound: bad r or m");
  return static_cast<double>(2 * r + 3) * m / n;
}

}  // namespace rcd
