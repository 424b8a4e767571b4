#include "sym_matrix.hpp"

#include <lapacke.h>

#include <stdexcept>
#include <string>

namespace rcd {

SymMatrix::SymMatrix(Matrix m) : mat_(std::move(m)) {
  if (mat_.rows() < 1 || mat_.rows() != mat_.cols())
    throw std::invalid_argument("SymMatrix: matrix must be square with dim >= 1");
  for (Eigen::Index j = 0; j < mat_.cols(); ++j)
    for (Eigen::Index i = j + 1; i < mat_.rows(); ++i)
      if (mat_(i, j) != mat_(j, i))
        throw std::invalid_argument("SymMatrix: entries are not symmetric");
}

SymMatrix::SymMatrix(Matrix m, trusted_tag) : mat_(std::move(m)) {}

SymMatrix SymMatrix::trusted(Matrix m) { return SymMatrix(std::move(m), trusted_tag{}); }

namespace detail {

void sym_eig_raw(Matrix& a, Vector& w) {
  const auto n = static_cast<lapack_int>(a.rows());
  w.resize(n);
  // 'V','L': a is overwritten with the eigenvectors, w ascending.
  lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, a.data(), n, w.data());
  if (info != 0)
    throw std::runtime_error("dsyevd failed, info=" + std::to_string(info));
}

Matrix psd_project_raw(Matrix m) {
  const Eigen::Index n = m.rows();
  Vector w;
  sym_eig_raw(m, w);
  // Ascending order puts the strictly positive eigenvalues at the tail.
  Eigen::Index first_pos = 0;
  while (first_pos < n && w(first_pos) <= 0.0) ++first_pos;
  const Eigen::Index k = n - first_pos;
  if (k == 0) return Matrix::Zero(n, n);
  Matrix scaled = m.rightCols(k) * w.tail(k).asDiagonal();
  Matrix x = scaled * m.rightCols(k).transpose();
  // GEMM blocking can leave sub-ulp asymmetry; restore exact symmetry.
  x = 0.5 * (x + x.transpose()).eval();
  return x;
}

}  // namespace detail

EigenPairs sym_eig(const SymMatrix& m) {
  if (!m.mat().allFinite())
    throw std::invalid_argument("sym_eig: non-finite entries");
  Matrix a = m.mat();
  Vector w;
  detail::sym_eig_raw(a, w);
  EigenPairs out;
  out.values = w.reverse();
  out.vectors = a.rowwise().reverse();
  return out;
}

SymMatrix psd_project(const SymMatrix& m) {
  if (!m.mat().allFinite())
    throw std::invalid_argument("psd_project: non-finite entries");
  return SymMatrix::trusted(detail::psd_project_raw(m.mat()));
}

SymMatrix clamp01(const SymMatrix& m) {
  return SymMatrix::trusted(m.mat().cwiseMax(0.0).cwiseMin(1.0));
}

double inner(const SymMatrix& a, const SymMatrix& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("inner: dimension mismatch");
  return a.mat().cwiseProduct(b.mat()).sum();
}

double min_eigenvalue(const SymMatrix& m) {
  Matrix a = m.mat();
  Vector w;
  detail::sym_eig_raw(a, w);
  return w(0);
}

}  // namespace rcd
