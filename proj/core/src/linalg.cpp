/**
 * @file linalg.cpp
 * @brief Implementation of the shared linear-algebra helpers.
 */
#include "cskit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

namespace cskit {

SymEigenResult jacobi_eigensymmetric(const Mat& a_in) {
  const int n = static_cast<int>(a_in.rows());
  Mat a = 0.5 * (a_in + a_in.transpose());  // enforce exact symmetry
  Mat v = Mat::Identity(n, n);

  const double total_norm = a.norm();
  const double stop = 1e-14 * (total_norm > 0 ? total_norm : 1.0);

  auto offdiag_norm = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && offdiag_norm() > stop; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) == 0.0) continue;
        // Classic 2x2 symmetric Schur rotation annihilating a(p,q).
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i) < a(j, j); });

  SymEigenResult out;
  out.eigenvalues = Vec(n);
  out.eigenvectors = Mat(n, n);
  for (int i = 0; i < n; ++i) {
    out.eigenvalues(i) = a(order[i], order[i]);
    out.eigenvectors.col(i) = v.col(order[i]);
  }
  return out;
}

Signature signature_of(const Mat& form) {
  const SymEigenResult eig = jacobi_eigensymmetric(form);
  const double scale = eig.eigenvalues.size() == 0
                           ? 0.0
                           : eig.eigenvalues.cwiseAbs().maxCoeff();
  const double tol = kRankRelTol * scale;
  Signature sig;
  for (int i = 0; i < eig.eigenvalues.size(); ++i) {
    const double lam = eig.eigenvalues(i);
    if (std::abs(lam) <= tol)
      ++sig.zero;
    else if (lam < 0)
      ++sig.neg;
    else
      ++sig.pos;
  }
  return sig;
}

Mat nullspace(const Mat& a) {
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double tol = kRankRelTol * (smax > 0 ? smax : 1.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > tol) ++rank;
  const int n = static_cast<int>(a.cols());
  return svd.matrixV().rightCols(n - rank);
}

int matrix_rank(const Mat& a) {
  Eigen::JacobiSVD<Mat> svd(a);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double tol = kRankRelTol * (smax > 0 ? smax : 1.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > tol) ++rank;
  return rank;
}

Mat expm(const Mat& a) { return a.exp(); }
CMat expm(const CMat& a) { return a.exp(); }
Mat logm(const Mat& a) { return a.log(); }

}  // namespace cskit
