/**
 * @file test_screws.cpp
 * @brief Screw motions, Chasles data, geodesics, and the signature census.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "cskit/errors.hpp"
#include "cskit/groups.hpp"
#include "cskit/linalg.hpp"
#include "cskit/rng.hpp"
#include "cskit/screws.hpp"
#include "doctest.h"

using namespace cskit;

namespace {
Vec3 rvec3(Rng& r, double s) {
  return {r.uniform(-s, s), r.uniform(-s, s), r.uniform(-s, s)};
}
}  // namespace

TEST_CASE("twist exponential: rotation about z with unit x velocity") {
  const Twist xi{Vec3(0, 0, 1), Vec3(1, 0, 0)};
  const double t = 0.5;
  const Mat m = twist_exp(MotionSpace::Euclidean, xi, t).m.real();
  Mat want(4, 4);
  want << std::cos(t), -std::sin(t), 0, std::sin(t),
          std::sin(t),  std::cos(t), 0, 1 - std::cos(t),
          0, 0, 1, 0,
          0, 0, 0, 1;
  CHECK(max_abs(Mat(m - want)) < 1e-14);
  CHECK(max_abs(Vec(twist_coords(xi) -
                    (Vec(6) << 0, 0, 1, 1, 0, 0).finished())) == 0.0);
}

TEST_CASE("screw data of a z-screw") {
  const Twist xi{Vec3(0, 0, M_PI / 2), Vec3(0, 0, 1)};
  const auto d = screw_decompose(twist_exp(MotionSpace::Euclidean, xi));
  CHECK(d.pure_translation == false);
  CHECK(d.angle == doctest::Approx(M_PI / 2).epsilon(1e-12));
  CHECK((d.axis - Vec3::UnitZ()).norm() < 1e-12);
  CHECK(d.point.norm() < 1e-12);
  CHECK(d.pitch == doctest::Approx(2.0 / M_PI).epsilon(1e-12));
}

TEST_CASE("decompose/reconstruct round trip") {
  Rng rng(70);
  for (int t = 0; t < 30; ++t) {
    Rng r = rng.split(t);
    Vec3 axis = rvec3(r, 1.0);
    if (axis.norm() < 1e-3) axis = Vec3::UnitX();
    axis.normalize();
    const double angle = r.uniform(0.05, 3.0);
    const Twist xi{Vec3(axis * angle), rvec3(r, 1.5)};
    const GroupElement g = twist_exp(MotionSpace::Euclidean, xi);
    const GroupElement back = screw_reconstruct(screw_decompose(g));
    CHECK(max_abs(CMat(back.m - g.m)) < 1e-9);
    // The reported point is the axis-orthogonal representative.
    const auto d = screw_decompose(g);
    CHECK(std::abs(d.point.dot(d.axis)) < 1e-9);
    CHECK(std::abs(d.axis.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("half-turn branch") {
  Rng rng(71);
  for (int t = 0; t < 10; ++t) {
    Rng r = rng.split(t);
    Vec3 axis = rvec3(r, 1.0);
    if (axis.norm() < 1e-3) axis = Vec3::UnitY();
    axis.normalize();
    const Twist xi{Vec3(axis * M_PI), rvec3(r, 1.0)};
    const GroupElement g = twist_exp(MotionSpace::Euclidean, xi);
    const auto d = screw_decompose(g);
    CHECK(d.angle == doctest::Approx(M_PI).epsilon(1e-7));
    // The axis is recovered up to the canonical orientation.
    CHECK(std::min((d.axis - axis).norm(), (d.axis + axis).norm()) < 1e-6);
    const GroupElement back = screw_reconstruct(d);
    // Near a half turn the trace is quadratically flat in the angle, so the
    // recovered angle (and hence the reconstruction) is only sqrt(eps)
    // accurate; 1e-6 leaves headroom over the ~1e-8 observed worst case.
    CHECK(max_abs(CMat(back.m - g.m)) < 1e-6);
  }
}

TEST_CASE("pure translations and the identity") {
  const Twist xi{Vec3::Zero(), Vec3(3, 4, 0)};
  const auto d = screw_decompose(twist_exp(MotionSpace::Euclidean, xi));
  CHECK(d.pure_translation == true);
  CHECK(d.angle == 0.0);
  CHECK(d.pitch == doctest::Approx(5.0).epsilon(1e-13));
  CHECK((d.axis - Vec3(0.6, 0.8, 0)).norm() < 1e-13);
  const GroupElement back = screw_reconstruct(d);
  CHECK(max_abs(Vec(Vec(back.m.real().topRightCorner(3, 1)) -
                    Vec3(3, 4, 0))) < 1e-12);

  const auto did = screw_decompose(group_identity(GroupId::SE3));
  CHECK(did.pure_translation == true);
  CHECK(did.pitch == 0.0);
  CHECK((did.axis - Vec3::UnitZ()).norm() == 0.0);

  CHECK_THROWS_AS(screw_decompose(group_identity(GroupId::SE21)), UsageError);
}

TEST_CASE("bundle metric blocks") {
  const Mat B = se3_bundle_metric(0.7, -1.2);
  CHECK(max_abs(Mat(B.topLeftCorner(3, 3) + 1.4 * Mat::Identity(3, 3))) <
        1e-15);
  CHECK(max_abs(Mat(B.topRightCorner(3, 3) - 2.4 * Mat::Identity(3, 3))) <
        1e-15);
  CHECK(max_abs(Mat(B.bottomRightCorner(3, 3))) == 0.0);
  CHECK(max_abs(Mat(B - B.transpose())) == 0.0);

  Vec e(3);
  e << -1, 1, 1;
  const Mat E = Mat(e.asDiagonal());
  const Mat B21 = se21_bundle_metric(0.5, 2.0);
  CHECK(max_abs(Mat(B21.topLeftCorner(3, 3) - E)) < 1e-15);
  CHECK(max_abs(Mat(B21.topRightCorner(3, 3) - 4.0 * E)) < 1e-15);
  CHECK(max_abs(Mat(B21.bottomRightCorner(3, 3))) == 0.0);
}

TEST_CASE("screws solve the geodesic equation of the bundle metrics") {
  Rng rng(72);
  for (const MotionSpace sp : {MotionSpace::Euclidean, MotionSpace::Minkowski}) {
    const GroupId id = motion_group(sp);
    for (int t = 0; t < 6; ++t) {
      Rng r = rng.split(t + (sp == MotionSpace::Minkowski ? 100 : 0));
      const Twist xi{rvec3(r, 0.8), rvec3(r, 1.0)};
      const GroupElement g0 = random_group_element(id, r, 0.2);
      const double s = r.uniform(-1.0, 1.0);
      double tt = r.uniform(-1.0, 1.0);
      if (std::abs(tt) < 0.3) tt = tt < 0 ? -0.3 : 0.3;
      const Mat B = sp == MotionSpace::Euclidean ? se3_bundle_metric(s, tt)
                                                 : se21_bundle_metric(s, tt);
      CHECK(geodesic_residual(sp, B, xi, g0) < 1e-4);
    }
  }
}

TEST_CASE("negative control: a perturbed metric rejects the screws") {
  Rng rng(73);
  Mat B = se3_bundle_metric(0.7, 0.9);
  B(0, 0) += 0.4;
  double worst = 0.0;
  for (int t = 0; t < 4; ++t) {
    Rng r = rng.split(t);
    const Twist xi{rvec3(r, 0.8), rvec3(r, 1.0)};
    const GroupElement g0 = random_group_element(GroupId::SE3, r, 0.2);
    worst = std::max(worst,
                     geodesic_residual(MotionSpace::Euclidean, B, xi, g0));
  }
  CHECK(worst > 1e-2);
}

TEST_CASE("no member of the family is Riemannian") {
  for (const MotionSpace sp : {MotionSpace::Euclidean, MotionSpace::Minkowski}) {
    const ObstructionScan scan = riemannian_obstruction_scan(sp);
    CHECK(scan.s_values.size() == 10);
    CHECK(scan.s_values.front() == doctest::Approx(-2.0));
    CHECK(scan.s_values.back() == doctest::Approx(2.0));
    CHECK(scan.min_negative == 3);
    for (const auto& rowsig : scan.signatures)
      for (const Signature& sig : rowsig) {
        CHECK(sig.neg >= 3);
        CHECK(sig.zero == 0);  // the even grid never hits t = 0
        CHECK(sig.neg + sig.pos == 6);
      }
  }
}
