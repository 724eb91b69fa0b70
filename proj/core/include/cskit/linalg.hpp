/**
 * @file linalg.hpp
 * @brief Dense linear-algebra helpers shared by all modules.
 *
 * Eigen supplies storage, decompositions and the matrix exponential /
 * logarithm.  The symmetric eigensolver used for metric signatures is a cyclic
 * Jacobi iteration implemented here: signatures are the load-bearing output of
 * the library, and Jacobi gives small, fully reproducible eigenvalues with a
 * clean termination criterion (off-diagonal Frobenius mass below 1e-14 times
 * the matrix norm, at most 100 sweeps).
 */
#pragma once

#include <Eigen/Dense>

namespace cskit {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Relative singular-value / eigenvalue threshold below which a direction is
/// treated as zero (scaled by the largest singular value of the matrix).
inline constexpr double kRankRelTol = 1e-10;

/// Result of the symmetric eigensolver.
struct SymEigenResult {
  Vec eigenvalues;   ///< ascending
  Mat eigenvectors;  ///< column i pairs with eigenvalues[i]
};

/// Cyclic Jacobi eigensolver for a symmetric matrix.
/// Sweeps until the off-diagonal Frobenius norm drops below
/// 1e-14 * ||A||_F (at most 100 sweeps).  Eigenvalues are sorted ascending.
SymEigenResult jacobi_eigensymmetric(const Mat& a);

/// Signature of a symmetric bilinear form.
struct Signature {
  int neg = 0;
  int pos = 0;
  int zero = 0;
  bool operator==(const Signature&) const = default;
};

/// Signature of a symmetric matrix.  An eigenvalue counts as zero when
/// |lambda| < kRankRelTol * max|lambda| (an exactly zero matrix is all-zero).
Signature signature_of(const Mat& form);

/// Orthonormal basis of the nullspace of a (rectangular) matrix, computed via
/// SVD with the relative threshold kRankRelTol.  Returns an n x k matrix whose
/// columns span ker(a); k may be zero.
Mat nullspace(const Mat& a);

/// Numerical rank with the same SVD threshold as nullspace().
int matrix_rank(const Mat& a);

/// Matrix exponential (Pade approximation with scaling and squaring).
Mat expm(const Mat& a);
CMat expm(const CMat& a);

/// Principal matrix logarithm.  The caller must keep the argument away from
/// the branch cut (no eigenvalues on the closed negative real axis).
Mat logm(const Mat& a);

/// Frobenius norm of (a - b), used pervasively in residual checks.
inline double frob_dist(const Mat& a, const Mat& b) { return (a - b).norm(); }
inline double frob_dist(const CMat& a, const CMat& b) { return (a - b).norm(); }

/// Max-abs entry, the residual flavor used by homomorphism checks.
inline double max_abs(const Mat& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}
inline double max_abs(const CMat& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}
inline double max_abs(const Vec& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}
inline double max_abs(const CVec& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

}  // namespace cskit
