#include "solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rcd {

void SolverConfig::validate() const {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::invalid_argument("SolverConfig: lambda must be in (0,1)");
  if (!(alpha >= 0.0)) throw std::invalid_argument("SolverConfig: alpha must be >= 0");
  if (!(rho > 0.0)) throw std::invalid_argument("SolverConfig: rho must be > 0");
  if (iterations < 1) throw std::invalid_argument("SolverConfig: iterations must be >= 1");
}

SymMatrix build_e(const Graph& g, double lambda, double alpha) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("build_e: lambda must be in [0,1]");
  if (!(alpha >= 0.0)) throw std::invalid_argument("build_e: alpha must be >= 0");
  const int n = g.num_nodes();
  const Matrix& a = g.adjacency();
  Matrix e = lambda * (Matrix::Ones(n, n) - Matrix::Identity(n, n) - a) - (1.0 - lambda) * a;
  e.diagonal().setConstant(alpha);
  return SymMatrix::trusted(std::move(e));
}

SymMatrix build_e_degree_corrected(const Graph& g) {
  const int n = g.num_nodes();
  const Matrix& a = g.adjacency();
  const Vector d = a.rowwise().sum() / static_cast<double>(n);
  const Vector u = (1.0 - d.array()).sqrt().matrix();  // sqrt(1 - d_i/N); d_i < N always
  const Vector s = d.array().sqrt().matrix();
  Matrix e = (s * s.transpose()).cwiseProduct(Matrix::Ones(n, n) - Matrix::Identity(n, n) - a) -
             (u * u.transpose()).cwiseProduct(a);
  e.diagonal().setZero();
  return SymMatrix::trusted(std::move(e));
}

namespace {

// Nearest-rank percentile of a sorted (ascending) sample: the value at
// 1-based rank ceil(p * n).
int percentile_nearest_rank(const std::vector<int>& sorted, double p) {
  const auto n = static_cast<double>(sorted.size());
  auto rank = static_cast<size_t>(std::ceil(p * n));
  rank = std::clamp<size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

}  // namespace

LambdaSelection select_lambda_trimmed(const Graph& g, double lo_pct, double hi_pct) {
  const int n = g.num_nodes();
  if (n < 2) throw std::invalid_argument("select_lambda_trimmed: need at least 2 nodes");
  if (!(lo_pct >= 0.0 && hi_pct <= 1.0 && lo_pct <= hi_pct))
    throw std::invalid_argument("select_lambda_trimmed: bad percentile bounds");

  const std::vector<int> deg = g.degrees();
  std::vector<int> sorted = deg;
  std::sort(sorted.begin(), sorted.end());
  const int lo_val = percentile_nearest_rank(sorted, lo_pct);
  const int hi_val = percentile_nearest_rank(sorted, hi_pct);

  std::vector<int> keep;
  for (int i = 0; i < n; ++i)
    if (deg[i] >= lo_val && deg[i] <= hi_val) keep.push_back(i);

  LambdaSelection out;
  out.nodes_kept = static_cast<int>(keep.size());
  if (keep.size() < 2) {
    out.whole_graph_fallback = true;
    out.nodes_kept = n;
    out.lambda = static_cast<double>(g.num_edges()) /
                 (static_cast<double>(n) * (n - 1) / 2.0);
  } else {
    int64_t edges = 0;
    const Matrix& a = g.adjacency();
    for (size_t x = 0; x < keep.size(); ++x)
      for (size_t y = x + 1; y < keep.size(); ++y)
        if (a(keep[x], keep[y]) != 0.0) ++edges;
    const double pairs = static_cast<double>(keep.size()) * (keep.size() - 1) / 2.0;
    out.lambda = static_cast<double>(edges) / pairs;
  }
  out.degenerate = (out.lambda <= 0.0 || out.lambda >= 1.0);
  return out;
}

double guard_lambda(double lambda, int n) {
  if (n < 2) throw std::invalid_argument("guard_lambda: need n >= 2");
  const double lo = 1.0 / n, hi = 1.0 - 1.0 / n;
  return std::clamp(lambda, lo, hi);
}

double lambda_from_pq(double p, double q) {
  if (!(q > 0.0 && p < 1.0 && q < p))
    throw std::invalid_argument("lambda_from_pq: need 0 < q < p < 1");
  const double l1 = std::log(p / q);
  const double l2 = std::log((1.0 - q) / (1.0 - p));
  return l2 / (l1 + l2);
}

Solution admm_solve(const SymMatrix& e_sym, const SolverConfig& cfg,
                    const AdmmObserver& observer) {
  cfg.validate();
  const Matrix& e = e_sym.mat();
  if (!e.allFinite()) throw std::invalid_argument("admm_solve: E has non-finite entries");
  const auto n = e.rows();

  const Matrix e_over_rho = e / cfg.rho;
  Matrix z = Matrix::Zero(n, n);
  Matrix mult = Matrix::Zero(n, n);
  Matrix y;

  std::vector<IterationStats> history;
  if (cfg.record_history) history.reserve(cfg.iterations);

  int k = 0;
  for (; k < cfg.iterations; ++k) {
    y = detail::psd_project_raw(z - mult - e_over_rho);
    z = (y + mult).cwiseMax(0.0).cwiseMin(1.0);
    mult += y - z;
    if (!y.allFinite() || !mult.allFinite())
      throw std::runtime_error("admm_solve: non-finite iterate at iteration " +
                               std::to_string(k + 1));
    const double residual = (y - z).norm();
    if (cfg.record_history) history.push_back({residual, y.cwiseProduct(e).sum()});
    if (observer) observer(k, y, z, mult);
    if (cfg.stop_tol > 0.0 && residual < cfg.stop_tol) {
      ++k;
      break;
    }
  }

  const double final_residual = (y - z).norm();
  const double objective = y.cwiseProduct(e).sum();
  return Solution{SymMatrix::trusted(std::move(y)), SymMatrix::trusted(std::move(z)),
                  final_residual, objective, k, std::move(history)};
}

}  // namespace rcd
