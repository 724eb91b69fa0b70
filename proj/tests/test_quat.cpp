/**
 * @file test_quat.cpp
 * @brief Quaternion, split-quaternion, and dual-pair arithmetic tests.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "cskit/errors.hpp"
#include "cskit/quat.hpp"
#include "cskit/rng.hpp"
#include "doctest.h"

using namespace cskit;

namespace {

double qdist(const Quat& a, const Quat& b) { return qnorm(qsub(a, b)); }

double sdist(const SplitQuat& a, const SplitQuat& b) {
  return std::sqrt((a.w - b.w) * (a.w - b.w) + (a.x - b.x) * (a.x - b.x) +
                   (a.y - b.y) * (a.y - b.y) + (a.z - b.z) * (a.z - b.z));
}

Quat rquat(Rng& r) {
  return {r.uniform(-2, 2), r.uniform(-2, 2), r.uniform(-2, 2),
          r.uniform(-2, 2)};
}

SplitQuat rsquat(Rng& r) {
  return {r.uniform(-2, 2), r.uniform(-2, 2), r.uniform(-2, 2),
          r.uniform(-2, 2)};
}

}  // namespace

TEST_CASE("Hamilton product golden: (1+i)(1+j) = 1+i+j+k") {
  CHECK(qdist(qmul({1, 1, 0, 0}, {1, 0, 1, 0}), {1, 1, 1, 1}) == 0.0);
  CHECK(qdist(qmul({0, 1, 0, 0}, {0, 0, 1, 0}), {0, 0, 0, 1}) == 0.0);  // ij=k
}

TEST_CASE("split product table") {
  const SplitQuat i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  CHECK(sdist(smul(i, i), {-1, 0, 0, 0}) == 0.0);
  CHECK(sdist(smul(j, j), {1, 0, 0, 0}) == 0.0);
  CHECK(sdist(smul(k, k), {1, 0, 0, 0}) == 0.0);
  CHECK(sdist(smul(i, j), k) == 0.0);
  CHECK(sdist(smul(j, i), sscale(-1, k)) == 0.0);
  CHECK(sdist(smul(j, k), sscale(-1, i)) == 0.0);
  CHECK(sdist(smul(k, j), i) == 0.0);
  CHECK(sdist(smul(k, i), j) == 0.0);
  CHECK(sdist(smul(i, k), sscale(-1, j)) == 0.0);
  // i j k = (i j) k = k k = 1.
  CHECK(sdist(smul(smul(i, j), k), {1, 0, 0, 0}) == 0.0);
}

TEST_CASE("split norm is the (2,2) form and is multiplicative") {
  CHECK(snorm2({1, 2, 3, 4}) == doctest::Approx(1 + 4 - 9 - 16));
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    Rng r = rng.split(t);
    const SplitQuat a = rsquat(r), b = rsquat(r);
    CHECK(snorm2(smul(a, b)) ==
          doctest::Approx(snorm2(a) * snorm2(b)).epsilon(1e-11));
  }
}

TEST_CASE("minkowski cross against the split product of pure elements") {
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    Rng r = rng.split(t);
    const Vec3 a(r.uniform(-2, 2), r.uniform(-2, 2), r.uniform(-2, 2));
    const Vec3 b(r.uniform(-2, 2), r.uniform(-2, 2), r.uniform(-2, 2));
    const SplitQuat p = smul(SplitQuat::pure(a), SplitQuat::pure(b));
    CHECK((p.vec() - minkowski_cross(a, b)).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(p.w == doctest::Approx(-minkowski_dot(a, b)).epsilon(1e-13));
    // The cross is null against both arguments in the (1,2) pairing.
    CHECK(std::abs(minkowski_dot(a, minkowski_cross(a, b))) < 1e-12);
  }
  CHECK((minkowski_cross(Vec3::UnitX(), Vec3::UnitY()) - Vec3::UnitZ())
            .cwiseAbs()
            .maxCoeff() == 0.0);
}

TEST_CASE("split exponential branches") {
  // Null vector part: exp(v) = 1 + v.
  const SplitQuat en = split_exp({0, 1, 1, 0});
  CHECK(sdist(en, {1, 1, 1, 0}) < 1e-15);
  // Elliptic: exp((pi/4) i) = cos(pi/4) + sin(pi/4) i.
  const SplitQuat ee = split_exp({0, M_PI / 4, 0, 0});
  CHECK(sdist(ee, {std::cos(M_PI / 4), std::sin(M_PI / 4), 0, 0}) < 1e-15);
  // Hyperbolic: exp(j) = cosh 1 + sinh 1 j.
  const SplitQuat eh = split_exp({0, 0, 1, 0});
  CHECK(sdist(eh, {std::cosh(1.0), 0, std::sinh(1.0), 0}) < 1e-15);
  // Real part scales out.
  const SplitQuat es = split_exp({2, 0, 1, 0});
  CHECK(sdist(es, sscale(std::exp(2.0), eh)) < 1e-12);

  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    Rng r = rng.split(t);
    const SplitQuat v{0, r.uniform(-1.5, 1.5), r.uniform(-1.5, 1.5),
                      r.uniform(-1.5, 1.5)};
    CHECK(std::abs(snorm2(split_exp(v)) - 1.0) < 1e-12);
  }
}

TEST_CASE("inverses") {
  Rng rng(14);
  for (int t = 0; t < 100; ++t) {
    Rng r = rng.split(t);
    Quat a = rquat(r);
    if (qnorm(a) < 0.1) a.w += 1;
    CHECK(qdist(qmul(a, qinv(a)), {1, 0, 0, 0}) < 1e-13);
    SplitQuat s = rsquat(r);
    if (std::abs(snorm2(s)) < 0.2) s.w += 2;
    CHECK(sdist(smul(s, sinv(s)), {1, 0, 0, 0}) < 1e-12);
  }
  CHECK_THROWS_AS(qinv({0, 0, 0, 0}), DegenerateError);
  CHECK_THROWS_AS(sinv({0, 1, 1, 0}), DegenerateError);  // null norm
}

TEST_CASE("dual golden: (i + eps j)(k + eps 1) = -j + eps 2i") {
  const DualQuat a{{0, 1, 0, 0}, {0, 0, 1, 0}};
  const DualQuat b{{0, 0, 0, 1}, {1, 0, 0, 0}};
  const DualQuat p = dmul(a, b);
  CHECK(qdist(p.r, {0, 0, -1, 0}) == 0.0);
  CHECK(qdist(p.d, {0, 2, 0, 0}) == 0.0);
}

TEST_CASE("dual inverse against the defining identity") {
  Rng rng(15);
  for (int t = 0; t < 100; ++t) {
    Rng r = rng.split(t);
    Quat re = rquat(r);
    if (qnorm(re) < 0.2) re.w += 1;
    const DualQuat a{re, rquat(r)};
    const DualQuat left = dmul(dinv(a), a);
    const DualQuat right = dmul(a, dinv(a));
    for (const DualQuat& p : {left, right}) {
      CHECK(qdist(p.r, {1, 0, 0, 0}) < 1e-12);
      CHECK(qnorm(p.d) < 1e-12);
    }
  }
}

TEST_CASE("dual norm is multiplicative as a dual number") {
  Rng rng(16);
  for (int t = 0; t < 100; ++t) {
    Rng r = rng.split(t);
    const DualQuat a{rquat(r), rquat(r)}, b{rquat(r), rquat(r)};
    const DualNumber lhs = dual_norm2(dmul(a, b));
    const DualNumber rhs = dual_mul(dual_norm2(a), dual_norm2(b));
    CHECK(std::abs(lhs.r - rhs.r) < 1e-11);
    CHECK(std::abs(lhs.d - rhs.d) < 1e-11);
  }
}

TEST_CASE("pose embedding golden and unit property") {
  const DualQuat q = unit_dq_from_pose({0, 1, 0, 0}, Vec3::UnitX());
  CHECK(qdist(q.d, {-1, 0, 0, 0}) == 0.0);
  CHECK(unit_residual(q) < 1e-15);

  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    Rng r = rng.split(t);
    Quat u = rquat(r);
    if (qnorm(u) < 0.1) u.w += 1;
    u = qscale(1.0 / qnorm(u), u);
    const Vec3 p(r.uniform(-3, 3), r.uniform(-3, 3), r.uniform(-3, 3));
    CHECK(unit_residual(unit_dq_from_pose(u, p)) < 1e-13);
  }
}

TEST_CASE("split causal classification") {
  // Positive Minkowski square of the vector part selects the trig branch.
  CHECK(causal_type(1.0, 1.0) == CausalType::Timelike);
  CHECK(causal_type(-1.0, 1.0) == CausalType::Spacelike);
  CHECK(causal_type(1e-15, 1.0) == CausalType::Lightlike);
  CHECK(causal_type(0.0, 0.0) == CausalType::Lightlike);
}

TEST_CASE("to_string formatting is stable") {
  CHECK(to_string(Quat{1, 2, 3, 4}) == "1 + 2 i + 3 j + 4 k");
  CHECK(to_string(DualQuat{{1, 0, 0, 0}, {0, 1, 0, 0}}) ==
        "1 + 0 i + 0 j + 0 k + e(0 + 1 i + 0 j + 0 k)");
}
