#pragma once

#include <Eigen/Dense>

namespace rcd {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Dense symmetric matrix. Entrywise symmetry is exact and checked at
// construction; routines that build symmetric output by construction use
// SymMatrix::trusted to skip the scan.
class SymMatrix {
 public:
  explicit SymMatrix(Matrix m);
  static SymMatrix trusted(Matrix m);

  int dim() const { return static_cast<int>(mat_.rows()); }
  double operator()(int i, int j) const { return mat_(i, j); }
  const Matrix& mat() const { return mat_; }

 private:
  struct trusted_tag {};
  SymMatrix(Matrix m, trusted_tag);
  Matrix mat_;
};

struct EigenPairs {
  Vector values;   // sorted descending
  Matrix vectors;  // orthonormal; vectors.col(i) pairs with values(i)
};

// Full eigendecomposition M = V diag(w) V^T (LAPACK dsyevd).
// Throws std::invalid_argument on non-finite entries.
EigenPairs sym_eig(const SymMatrix& m);

// Frobenius-nearest PSD matrix: zero out the negative eigenvalues.
// An eigenvalue counts as positive iff it is > 0 exactly.
SymMatrix psd_project(const SymMatrix& m);

// Entrywise projection onto the box [0, 1].
SymMatrix clamp01(const SymMatrix& m);

// <A, B> = sum_ij A_ij B_ij.
double inner(const SymMatrix& a, const SymMatrix& b);

double min_eigenvalue(const SymMatrix& m);

namespace detail {
// In-place kernels on raw matrices for hot loops; inputs must be symmetric.
Matrix psd_project_raw(Matrix m);
void sym_eig_raw(Matrix& vectors_out, Vector& values_out);  // ascending values
}  // namespace detail

}  // namespace rcd
