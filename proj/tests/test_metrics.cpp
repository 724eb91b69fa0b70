/**
 * @file test_metrics.cpp
 * @brief Parallelism metric fields, the so(3,1) pencil, cotangent metrics.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "cskit/errors.hpp"
#include "cskit/lie_algebra.hpp"
#include "cskit/linalg.hpp"
#include "cskit/metrics.hpp"
#include "cskit/rng.hpp"
#include "doctest.h"

using namespace cskit;

namespace {
std::vector<Vec> random_points(Rng& rng, int count, int dim, double s) {
  std::vector<Vec> pts;
  for (int t = 0; t < count; ++t) {
    Rng r = rng.split(t);
    Vec p(dim);
    for (int i = 0; i < dim; ++i) p(i) = r.uniform(-s, s);
    pts.push_back(p);
  }
  return pts;
}
}  // namespace

TEST_CASE("Heisenberg field: origin value, frame, determinant") {
  const H3MetricParams p{2.0, 0.3, -0.4, 0.1, 1.5, 1.2};
  const CoordinateMetricField f = h3_metric_field(p);
  REQUIRE(f.dim == 3);
  Mat origin(3, 3);
  origin << p.m, p.d, p.c, p.d, p.e, p.b, p.c, p.b, p.a;
  CHECK(max_abs(Mat(f.at(Vec::Zero(3)) - origin)) < 1e-15);

  Vec q(3);
  q << 0.7, -1.1, 0.4;
  const Mat F = f.frame(q);
  Mat wantF = Mat::Identity(3, 3);
  wantF(2, 1) = 0.7;  // e2+ = d/dy + x d/dz
  CHECK(max_abs(Mat(F - wantF)) == 0.0);

  // Symmetry and position-independent determinant.
  Rng rng(60);
  const double want_det = p.a * p.e * p.m - p.a * p.d * p.d -
                          p.b * p.b * p.m + 2 * p.b * p.c * p.d -
                          p.c * p.c * p.e;
  CHECK(h3_metric_det(p) == doctest::Approx(want_det).epsilon(1e-14));
  for (const Vec& x : random_points(rng, 10, 3, 2.0)) {
    const Mat M = f.at(x);
    CHECK(max_abs(Mat(M - M.transpose())) < 1e-15);
    CHECK(std::abs(M.determinant() - want_det) < 1e-12);
  }
}

TEST_CASE("Heisenberg fields satisfy the parallelism identity") {
  const LieAlgebra& h3 = builtin_algebra("h3");
  Rng rng(61);
  for (int trial = 0; trial < 8; ++trial) {
    Rng r = rng.split(trial);
    H3MetricParams p;
    p.a = r.uniform(-2.0, 2.0);
    p.b = r.uniform(-2.0, 2.0);
    p.c = r.uniform(-2.0, 2.0);
    p.d = r.uniform(-2.0, 2.0);
    p.e = r.uniform(-2.0, 2.0);
    p.m = r.uniform(-2.0, 2.0);
    Rng pr = r.split(1000);
    const auto pts = random_points(pr, 15, 3, 1.5);
    CHECK(parallelism_residual(h3_metric_field(p), h3, pts) < 1e-6);
  }
}

TEST_CASE("negative control: a tampered entry breaks parallelism") {
  const LieAlgebra& h3 = builtin_algebra("h3");
  const H3MetricParams p{1.0, 0.2, -0.3, 0.4, 1.0, 1.0};
  CoordinateMetricField bad = h3_metric_field(p);
  const auto base_at = bad.at;
  bad.at = [base_at](const Vec& x) {
    Mat M = base_at(x);
    M(0, 1) *= 2.0;
    M(1, 0) *= 2.0;
    return M;
  };
  Rng rng(62);
  const auto pts = random_points(rng, 15, 3, 1.5);
  CHECK(parallelism_residual(bad, h3, pts) > 1e-3);
}

TEST_CASE("a bi-invariant constant field has zero parallelism defect") {
  // For so3 the structure constants are totally antisymmetric, so the
  // Euclidean form in an identity frame satisfies the identity exactly.
  CoordinateMetricField f;
  f.dim = 3;
  f.at = [](const Vec&) { return Mat(Mat::Identity(3, 3)); };
  f.frame = [](const Vec&) { return Mat(Mat::Identity(3, 3)); };
  Rng rng(63);
  const auto pts = random_points(rng, 5, 3, 1.0);
  CHECK(parallelism_residual(f, builtin_algebra("so3"), pts) < 1e-12);
}

TEST_CASE("so(3,1): secondary pairing, complex structure, pencil") {
  const Mat D = so31_D_matrix();
  const Mat J = so31_J_matrix();
  Mat eta = Mat::Zero(6, 6);
  eta.diagonal() << 1, 1, 1, -1, -1, -1;
  CHECK(max_abs(Mat(J - eta * D)) == 0.0);
  CHECK(max_abs(Mat(J * J + Mat::Identity(6, 6))) == 0.0);
  CHECK(max_abs(Mat(D - D.transpose())) == 0.0);
  // D has exactly six nonzero entries.
  CHECK(D(0, 3) == 1.0);
  CHECK(D(1, 4) == 1.0);
  CHECK(D(2, 5) == -1.0);
  CHECK(D.cwiseAbs().sum() == 6.0);

  const LieAlgebra& so31 = builtin_algebra("so31");
  const Mat K0 = killing_form(so31);
  CHECK(max_abs(Mat(so31_kj_matrix() - J.transpose() * K0)) < 1e-12);
  CHECK(max_abs(Mat(so31_kj_matrix() - 4.0 * D)) < 1e-12);

  Rng rng(64);
  for (int t = 0; t < 20; ++t) {
    Rng r = rng.split(t);
    const double k1 = r.uniform(-2.0, 2.0), k2 = r.uniform(-2.0, 2.0);
    const Mat B = so31_metric(k1, k2);
    CHECK(max_abs(Mat(B - (k1 * eta + k2 * D))) < 1e-15);
    CHECK(ad_invariance_residual(so31, B) < 1e-12);
    const double want = -std::pow(k1 * k1 + k2 * k2, 3);
    CHECK(std::abs(B.determinant() - want) < 1e-10 * std::abs(want));
    CHECK(std::abs(so31_metric_det(k1, k2) - want) < 1e-12);
  }
  CHECK_THROWS_AS(so31_metric(0.0, 0.0), DegenerateError);

  // The invariant-form space is exactly the pencil.
  const auto forms = ad_invariant_symmetric_forms(so31);
  CHECK(forms.size() == 2);
  Mat stacked(4, 36);
  auto row = [](const Mat& m) {
    Eigen::RowVectorXd r(36);
    int t = 0;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) r(t++) = m(i, j);
    return r;
  };
  stacked.row(0) = row(forms[0]);
  stacked.row(1) = row(forms[1]);
  stacked.row(2) = row(K0);
  stacked.row(3) = row(D);
  CHECK(matrix_rank(stacked) == 2);
}

TEST_CASE("every invariant form on h3 is degenerate") {
  const auto forms = ad_invariant_symmetric_forms(builtin_algebra("h3"));
  CHECK(forms.size() == 3);
  Rng rng(65);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    Rng r = rng.split(t);
    Vec c(3);
    for (int i = 0; i < 3; ++i) c(i) = r.uniform(-1.0, 1.0);
    if (c.norm() < 1e-6) continue;
    c /= c.norm();
    const Mat B = c(0) * forms[0] + c(1) * forms[1] + c(2) * forms[2];
    worst = std::max(worst, std::abs(B.determinant()));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("odd cotangent metric: blocks, eigenvalues, signature") {
  const LieAlgebra& so3 = builtin_algebra("so3");
  const Mat B = cotangent_metric_odd(so3, 2.0, 3.0);
  REQUIRE(B.rows() == 6);
  CHECK(max_abs(Mat(B.topLeftCorner(3, 3) + 2.0 * Mat::Identity(3, 3))) <
        1e-14);  // s K0 = -s I for so3
  CHECK(max_abs(Mat(B.topRightCorner(3, 3) - 3.0 * Mat::Identity(3, 3))) ==
        0.0);
  CHECK(max_abs(Mat(B.bottomRightCorner(3, 3))) == 0.0);
  CHECK(max_abs(Mat(B - B.transpose())) == 0.0);
  CHECK_THROWS_AS(cotangent_metric_odd(so3, 1.0, 0.0), DegenerateError);

  // Golden spectra at s = t = 1 (roots of l^2 -+ l - 1).
  const double phi = 1.6180339887498949;
  const Vec got = jacobi_eigensymmetric(cotangent_metric_odd(so3, 1, 1))
                      .eigenvalues;
  for (int i = 0; i < 3; ++i) CHECK(got(i) == doctest::Approx(-phi));
  for (int i = 3; i < 6; ++i) CHECK(got(i) == doctest::Approx(phi - 1.0));

  const Vec sl2got =
      jacobi_eigensymmetric(cotangent_metric_odd(builtin_algebra("sl2"), 1, 1))
          .eigenvalues;
  Vec sl2want(6);
  sl2want << -phi, -(phi - 1.0), -(phi - 1.0), phi - 1.0, phi, phi;
  CHECK(max_abs(Vec(sl2got - sl2want)) < 1e-12);

  Rng rng(66);
  for (const char* name : {"so3", "su2", "sl2", "so21"}) {
    const LieAlgebra& L = builtin_algebra(name);
    const LieAlgebra ct = cotangent_algebra(L);
    INFO(name);
    for (int t = 0; t < 15; ++t) {
      Rng r = rng.split(t);
      const double s = r.uniform(-2.0, 2.0);
      double tt = r.uniform(-2.0, 2.0);
      if (std::abs(tt) < 0.1) tt = tt < 0 ? -0.1 : 0.1;
      const Mat M = cotangent_metric_odd(L, s, tt);
      CHECK(odd_metric_eigen_residual(L, s, tt) < 1e-10);
      CHECK(signature_of(M) == Signature{L.dim, L.dim, 0});
      CHECK(ad_invariance_residual(ct, M) < 1e-12);
    }
  }
}

TEST_CASE("even cotangent metric over so(3,1)") {
  const LieAlgebra& so31 = builtin_algebra("so31");
  const LieAlgebra ct = cotangent_algebra(so31);
  const Mat K0 = killing_form(so31);
  const Mat KJ = so31_kj_matrix();
  const Mat J = so31_J_matrix();

  Rng rng(67);
  for (int t = 0; t < 15; ++t) {
    Rng r = rng.split(t);
    const double s1 = r.uniform(-2.0, 2.0), s2 = r.uniform(-2.0, 2.0);
    double t1 = r.uniform(-2.0, 2.0), t2 = r.uniform(-2.0, 2.0);
    if (t1 * t1 + t2 * t2 < 0.01) t1 = 0.5;
    const Mat B = cotangent_metric_even_so31(s1, s2, t1, t2);
    REQUIRE(B.rows() == 12);
    CHECK(max_abs(Mat(B - B.transpose())) == 0.0);
    CHECK(max_abs(Mat(B.topLeftCorner(6, 6) - (s1 * K0 + s2 * KJ))) < 1e-13);
    const Mat P = t1 * Mat::Identity(6, 6) + t2 * J.transpose();
    CHECK(max_abs(Mat(B.topRightCorner(6, 6) - P)) < 1e-14);
    CHECK(max_abs(Mat(B.bottomRightCorner(6, 6))) == 0.0);
    CHECK(signature_of(B) == Signature{6, 6, 0});
    CHECK(ad_invariance_residual(ct, B) < 1e-12);
  }
  CHECK_THROWS_AS(cotangent_metric_even_so31(1.0, 1.0, 0.0, 0.0),
                  DegenerateError);
}
