/**
 * @file metrics.cpp
 * @brief Parallelism metrics and cotangent-group block metrics.
 */
#include "cskit/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "cskit/errors.hpp"

namespace cskit {

CoordinateMetricField h3_metric_field(const H3MetricParams& p) {
  CoordinateMetricField f;
  f.dim = 3;
  f.at = [p](const Vec& q) {
    const double x = q(0), y = q(1);
    const double m11 = p.a * y * y / 4 - p.c * y + p.m;
    const double m12 = p.a * x * y / 4 - p.c * x / 2 - p.b * y / 2 + p.d;
    const double m13 = -(p.a * y / 2 - p.c);
    const double m22 = p.a * x * x / 4 - p.b * x + p.e;
    const double m23 = -(p.a * x / 2 - p.b);
    Mat mu(3, 3);
    mu << m11, m12, m13,
          m12, m22, m23,
          m13, m23, p.a;
    return mu;
  };
  f.frame = [](const Vec& q) {
    Mat F = Mat::Identity(3, 3);
    F(2, 1) = q(0);  // e2+ = d/dy + x d/dz
    return F;
  };
  return f;
}

double h3_metric_det(const H3MetricParams& p) {
  return p.a * p.e * p.m - p.a * p.d * p.d - p.b * p.b * p.m +
         2 * p.b * p.c * p.d - p.c * p.c * p.e;
}

double parallelism_residual(const CoordinateMetricField& field,
                            const LieAlgebra& L,
                            const std::vector<Vec>& points, double h) {
  const int n = L.dim;
  auto G = [&](const Vec& x) {
    const Mat F = field.frame(x);
    return Mat(F.transpose() * field.at(x) * F);
  };
  double res = 0.0;
  for (const Vec& x : points) {
    const Mat F0 = field.frame(x);
    const Mat G0 = G(x);
    for (int i = 0; i < n; ++i) {
      const Vec v = F0.col(i);
      const Mat dG = Mat((G(Vec(x + h * v)) - G(Vec(x - h * v))) / (2 * h));
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          double rhs = 0.0;
          for (int t = 0; t < n; ++t)
            rhs += L.get(i, j, t) * G0(t, k) + L.get(i, k, t) * G0(j, t);
          res = std::max(res, std::abs(dG(j, k) - 0.5 * rhs));
        }
    }
  }
  return res;
}

Mat so31_D_matrix() {
  Mat D = Mat::Zero(6, 6);
  D(0, 3) = D(3, 0) = 1.0;
  D(1, 4) = D(4, 1) = 1.0;
  D(2, 5) = D(5, 2) = -1.0;
  return D;
}

Mat so31_J_matrix() {
  Vec eta(6);
  eta << 1, 1, 1, -1, -1, -1;
  return Mat(eta.asDiagonal() * so31_D_matrix());
}

Mat so31_kj_matrix() { return Mat(4.0 * so31_D_matrix()); }

Mat so31_metric(double k1, double k2) {
  if (k1 * k1 + k2 * k2 < 1e-24)
    throw DegenerateError("so31 metric requires (k1, k2) != (0, 0)");
  Vec eta(6);
  eta << 1, 1, 1, -1, -1, -1;
  return Mat(k1 * Mat(eta.asDiagonal()) + k2 * so31_D_matrix());
}

double so31_metric_det(double k1, double k2) {
  const double r = k1 * k1 + k2 * k2;
  return -r * r * r;
}

Mat cotangent_metric_odd(const LieAlgebra& L, double s, double t) {
  if (std::abs(t) < 1e-12)
    throw DegenerateError("odd cotangent metric is degenerate at t = 0");
  const int n = L.dim;
  Mat B = Mat::Zero(2 * n, 2 * n);
  B.topLeftCorner(n, n) = s * killing_form(L);
  B.topRightCorner(n, n) = t * Mat::Identity(n, n);
  B.bottomLeftCorner(n, n) = t * Mat::Identity(n, n);
  return B;
}

Mat cotangent_metric_even_so31(double s1, double s2, double t1, double t2) {
  if (t1 * t1 + t2 * t2 < 1e-24)
    throw DegenerateError(
        "even cotangent metric is degenerate at t1 = t2 = 0");
  const LieAlgebra L = builtin_algebra("so31");
  const Mat J = so31_J_matrix();
  const Mat P = t1 * Mat::Identity(6, 6) + t2 * J.transpose();
  Mat B = Mat::Zero(12, 12);
  B.topLeftCorner(6, 6) = s1 * killing_form(L) + s2 * so31_kj_matrix();
  B.topRightCorner(6, 6) = P;
  B.bottomLeftCorner(6, 6) = P.transpose();
  return B;
}

std::vector<double> odd_metric_expected_eigenvalues(const LieAlgebra& L,
                                                    double s, double t) {
  const Mat K = killing_form(L);
  const int n = L.dim;
  double c = 0.0;
  for (int i = 0; i < n; ++i) c = std::max(c, std::abs(K(i, i)));
  // The closed form needs K0 = c diag(eps), eps_i = +-1.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double want = (i == j) ? c : 0.0;
      if (std::abs(std::abs(K(i, j)) - want) > 1e-9 * std::max(1.0, c))
        throw DegenerateError("Killing form of " + L.name +
                              " is not c diag(+-1) in this basis");
    }
  const double cs = c * s;
  const double disc = std::sqrt(cs * cs + 4 * t * t);
  const double l1 = 0.5 * (cs - disc);
  const double l2 = 0.5 * (cs + disc);
  std::vector<double> out;
  out.reserve(2 * n);
  for (int i = 0; i < n; ++i) {
    if (K(i, i) > 0) {
      out.push_back(l1);
      out.push_back(l2);
    } else {
      out.push_back(-l1);
      out.push_back(-l2);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double odd_metric_eigen_residual(const LieAlgebra& L, double s, double t) {
  const auto expected = odd_metric_expected_eigenvalues(L, s, t);
  const Mat B = cotangent_metric_odd(L, s, t);
  const auto eig = jacobi_eigensymmetric(B);
  double res = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i)
    res = std::max(res,
                   std::abs(eig.eigenvalues(static_cast<int>(i)) -
                            expected[i]));
  return res;
}

}  // namespace cskit
