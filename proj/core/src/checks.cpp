/**
 * @file checks.cpp
 * @brief Implementation of the property-check suites.
 */
#include "cskit/checks.hpp"

#include <algorithm>
#include <cmath>

#include "cskit/errors.hpp"
#include "cskit/groups.hpp"
#include "cskit/isomaps.hpp"
#include "cskit/lie_algebra.hpp"
#include "cskit/linalg.hpp"
#include "cskit/metrics.hpp"
#include "cskit/quat.hpp"
#include "cskit/rng.hpp"
#include "cskit/screws.hpp"

namespace cskit {

namespace {

class Harness {
 public:
  explicit Harness(const CheckOptions& opt) : opt_(opt) {}

  void add(const std::string& name, double residual, double default_tol) {
    double tol = default_tol;
    const auto it = opt_.tolerance_overrides.find(name);
    if (it != opt_.tolerance_overrides.end()) tol = it->second;
    results_.push_back({name, residual, tol, residual <= tol});
  }

  /// Deterministic per-check generator: seed XOR FNV-1a(name).
  Rng rng(const std::string& name) const {
    std::uint64_t h = 1469598103934665603ull;
    for (const char c : name) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    return Rng(opt_.seed ^ h);
  }

  int trials() const { return opt_.trials; }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  CheckOptions opt_;
  std::vector<CheckResult> results_;
};

Vec3 random_vec3(Rng& r, double lo, double hi) {
  return {r.uniform(lo, hi), r.uniform(lo, hi), r.uniform(lo, hi)};
}

Quat random_quat(Rng& r, double lo, double hi) {
  return {r.uniform(lo, hi), r.uniform(lo, hi), r.uniform(lo, hi),
          r.uniform(lo, hi)};
}

SplitQuat random_squat(Rng& r, double lo, double hi) {
  return {r.uniform(lo, hi), r.uniform(lo, hi), r.uniform(lo, hi),
          r.uniform(lo, hi)};
}

// ------------------------------------------------------------------ algebra

void add_algebra_checks(Harness& h) {
  for (const auto& name : builtin_algebra_names()) {
    const LieAlgebra L = builtin_algebra(name);
    h.add("algebra.antisymmetry." + name, antisymmetry_residual(L), 1e-12);
    h.add("algebra.jacobi." + name, jacobi_residual(L), 1e-12);
  }

  {
    const Mat K = killing_form(builtin_algebra("so31"));
    Vec eta(6);
    eta << 1, 1, 1, -1, -1, -1;
    h.add("algebra.killing_so31",
          max_abs(Mat(K - 4.0 * Mat(eta.asDiagonal()))), 1e-12);
  }
  {
    Vec d(3);
    d << -1, 1, 1;
    const Mat D = Mat(d.asDiagonal());
    h.add("algebra.killing_sl2",
          max_abs(Mat(killing_form(builtin_algebra("sl2")) - D)), 1e-12);
    h.add("algebra.killing_so21",
          max_abs(Mat(killing_form(builtin_algebra("so21")) - D)), 1e-12);
  }
  h.add("algebra.killing_so3",
        max_abs(Mat(killing_form(builtin_algebra("so3")) +
                    Mat::Identity(3, 3))),
        1e-12);
  h.add("algebra.killing_su2",
        max_abs(Mat(killing_form(builtin_algebra("su2")) +
                    8.0 * Mat::Identity(3, 3))),
        1e-12);
  h.add("algebra.killing_h3_zero",
        max_abs(killing_form(builtin_algebra("h3"))), 1e-12);

  {
    double res = 0.0;
    const std::map<std::string, int> expected = {{"su2", 1},  {"so3", 1},
                                                 {"sl2", 1},  {"so21", 1},
                                                 {"so31", 2}, {"h3", 3}};
    for (const auto& [name, dim] : expected) {
      const auto basis = centralizer_basis(builtin_algebra(name));
      res = std::max(res,
                     std::abs(static_cast<double>(basis.size()) - dim));
    }
    h.add("algebra.centralizer_dims", res, 0.5);
  }

  {
    const auto cs = complex_structure(builtin_algebra("so31"));
    double res = 1.0;
    if (cs.found) {
      const Mat J = cs.J;
      const Mat Jref = so31_J_matrix();
      res = std::max(
          max_abs(Mat(J * J + Mat::Identity(6, 6))),
          std::min(max_abs(Mat(J - Jref)), max_abs(Mat(J + Jref))));
    }
    h.add("algebra.complex_structure_so31", res, 1e-10);
  }

  {
    double res = 0.0;
    for (const std::string name : {"su2", "so3", "sl2", "so21", "so31"}) {
      const LieAlgebra L = builtin_algebra(name);
      const int dd = derived_dim(cotangent_algebra(L));
      res = std::max(res, std::abs(static_cast<double>(dd) - 2.0 * L.dim));
    }
    h.add("algebra.cotangent_perfect", res, 0.5);
    h.add("algebra.h3_derived_dim",
          std::abs(static_cast<double>(derived_dim(builtin_algebra("h3"))) -
                   1.0),
          0.5);
  }
}

// --------------------------------------------------------------------- quat

void add_quat_checks(Harness& h) {
  {
    const Quat lhs = qmul({1, 1, 0, 0}, {1, 0, 1, 0});
    const Quat want{1, 1, 1, 1};
    h.add("quat.mul_golden", qnorm(qsub(lhs, want)), 1e-15);
  }

  {
    const SplitQuat i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
    auto dist = [](const SplitQuat& a, const SplitQuat& b) {
      return std::sqrt((a.w - b.w) * (a.w - b.w) + (a.x - b.x) * (a.x - b.x) +
                       (a.y - b.y) * (a.y - b.y) + (a.z - b.z) * (a.z - b.z));
    };
    double res = 0.0;
    res = std::max(res, dist(smul(i, i), {-1, 0, 0, 0}));
    res = std::max(res, dist(smul(j, j), {1, 0, 0, 0}));
    res = std::max(res, dist(smul(k, k), {1, 0, 0, 0}));
    res = std::max(res, dist(smul(i, j), k));
    res = std::max(res, dist(smul(j, i), sscale(-1, k)));
    res = std::max(res, dist(smul(j, k), sscale(-1, i)));
    res = std::max(res, dist(smul(k, j), i));
    res = std::max(res, dist(smul(k, i), j));
    res = std::max(res, dist(smul(i, k), sscale(-1, j)));
    h.add("quat.split_table", res, 1e-15);
    h.add("quat.split_cross_sign",
          (minkowski_cross(Vec3::UnitX(), Vec3::UnitY()) - Vec3::UnitZ())
              .cwiseAbs()
              .maxCoeff(),
          1e-15);
  }

  {
    Rng rng = h.rng("quat.norm_mult");
    double res = 0.0;
    for (int t = 0; t < h.trials(); ++t) {
      Rng r = rng.split(t);
      const Quat a = random_quat(r, -2, 2), b = random_quat(r, -2, 2);
      const double lhs = qnorm2(qmul(a, b));
      const double rhs = qnorm2(a) * qnorm2(b);
      res = std::max(res, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    h.add("quat.norm_mult", res, 1e-12);
  }

  {
    Rng rng = h.rng("quat.split_norm_mult");
    double res = 0.0;
    for (int t = 0; t < h.trials(); ++t) {
      Rng r = rng.split(t);
      const SplitQuat a = random_squat(r, -2, 2), b = random_squat(r, -2, 2);
      const double lhs = snorm2(smul(a, b));
      const double rhs = snorm2(a) * snorm2(b);
      res = std::max(res, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    h.add("quat.split_norm_mult", res, 1e-12);
  }

  {
    Rng rng = h.rng("quat.dual_norm_mult");
    double res = 0.0;
    for (int t = 0; t < h.trials(); ++t) {
      Rng r = rng.split(t);
      const DualQuat a{random_quat(r, -2, 2), random_quat(r, -2, 2)};
      const DualQuat b{random_quat(r, -2, 2), random_quat(r, -2, 2)};
      const DualNumber lhs = dual_norm2(dmul(a, b));
      const DualNumber rhs = dual_mul(dual_norm2(a), dual_norm2(b));
      const double scale = std::max({1.0, std::abs(rhs.r), std::abs(rhs.d)});
      res = std::max(res, std::max(std::abs(lhs.r - rhs.r),
                                   std::abs(lhs.d - rhs.d)) /
                              scale);
    }
    h.add("quat.dual_norm_mult", res, 1e-12);
  }

  {
    Rng rng = h.rng("quat.dual_inverse");
    double res = 0.0;
    for (int t = 0; t < h.trials(); ++t) {
      Rng r = rng.split(t);
      Quat qr = random_quat(r, -2, 2);
      if (qnorm(qr) < 0.2) qr.w += 1.0;
      const DualQuat a{qr, random_quat(r, -2, 2)};
      const DualQuat p = dmul(a, dinv(a));
      res = std::max(res, qnorm(qsub(p.r, {1, 0, 0, 0})));
      res = std::max(res, qnorm(p.d));
    }
    h.add("quat.dual_inverse", res, 1e-12);
  }

  {
    Rng rng = h.rng("quat.split_dual_inverse");
    double res = 0.0;
    for (int t = 0; t < h.trials(); ++t) {
      Rng r = rng.split(t);
      SplitQuat qr = random_squat(r, -2, 2);
      if (std::abs(snorm2(qr)) < 0.2) qr.w += 2.0;
      const DualSplitQuat a{qr, random_squat(r, -2, 2)};
      const DualSplitQuat p = dmul(a, dinv(a));
      double d = 0.0;
      d = std::max(d, std::abs(p.r.w - 1.0));
      d = std::max({d, std::abs(p.r.x), std::abs(p.r.y), std::abs(p.r.z)});
      d = std::max({d, std::abs(p.d.w), std::abs(p.d.x), std::abs(p.d.y),
                    std::abs(p.d.z)});
      res = std::max(res, d);
    }
    h.add("quat.split_dual_inverse", res, 1e-11);
  }

  {
    double res = 0.0;
    // exp(i + j): null vector part, exp = 1 + v.
    const SplitQuat e1 = split_exp({0, 1, 1, 0});
    res = std::max(res, std::abs(e1.w - 1.0));
    res = std::max(res, std::abs(e1.x - 1.0));
    res = std::max(res, std::abs(e1.y - 1.0));
    res = std::max(res, std::abs(e1.z));
    // exp((pi/4) i): elliptic.
    const SplitQuat e2 = split_exp({0, M_PI / 4, 0, 0});
    res = std::max(res, std::abs(e2.w - std::cos(M_PI / 4)));
    res = std::max(res, std::abs(e2.x - std::sin(M_PI / 4)));
    // exp(j): hyperbolic.
    const SplitQuat e3 = split_exp({0, 0, 1, 0});
    res = std::max(res, std::abs(e3.w - std::cosh(1.0)));
    res = std::max(res, std::abs(e3.y - std::sinh(1.0)));
    h.add("quat.split_exp_goldens", res, 1e-12);
  }

  {
    Rng rng = h.rng("quat.split_exp_unit");
    double res = 0.0;
    for (int t = 0; t < h.trials(); ++t) {
      Rng r = rng.split(t);
      const SplitQuat v{0, r.uniform(-1.5, 1.5), r.uniform(-1.5, 1.5),
                        r.uniform(-1.5, 1.5)};
      res = std::max(res, std::abs(snorm2(split_exp(v)) - 1.0));
    }
    h.add("quat.split_exp_unit", res, 1e-12);
  }

  {
    // (i + eps j)(k + eps 1) = -j + eps(2 i)
    const DualQuat a{{0, 1, 0, 0}, {0, 0, 1, 0}};
    const DualQuat b{{0, 0, 0, 1}, {1, 0, 0, 0}};
    const DualQuat p = dmul(a, b);
    double res = qnorm(qsub(p.r, {0, 0, -1, 0}));
    res = std::max(res, qnorm(qsub(p.d, {0, 2, 0, 0})));
    h.add("quat.dual_mul_golden", res, 1e-15);
  }

  {
    // pose (rotation i, translation e_x): dual part = pure(e_x) * i = -1.
    const DualQuat q = unit_dq_from_pose({0, 1, 0, 0}, Vec3::UnitX());
    double res = qnorm(qsub(q.d, {-1, 0, 0, 0}));
    res = std::max(res, unit_residual(q));
    h.add("quat.unit_from_pose_golden", res, 1e-15);
  }

  {
    Rng rng = h.rng("quat.unit_from_pose");
    double res = 0.0;
    for (int t = 0; t < h.trials(); ++t) {
      Rng r = rng.split(t);
      const DualQuat q =
          unit_dq_from_pose(sample_unit_quat(r), random_vec3(r, -2, 2));
      res = std::max(res, unit_residual(q));
      const DualSplitQuat s = unit_dsq_from_pose(sample_unit_split_quat(r),
                                                 random_vec3(r, -2, 2));
      res = std::max(res, unit_residual(s));
    }
    h.add("quat.unit_from_pose", res, 1e-12);
  }
}

// ------------------------------------------------------------------- covers

void add_covers_checks(Harness& h) {
  for (const auto& map : iso_registry()) {
    const std::string name = "covers.hom." + map.name;
    h.add(name, hom_residual(map, h.trials(), h.rng(name)), 1e-10);
  }

  {
    const double c = std::cos(M_PI / 4), s = std::sin(M_PI / 4);
    Mat want(3, 3);
    want << 0, -1, 0, 1, 0, 0, 0, 0, 1;
    h.add("covers.rot3_golden", max_abs(Mat(rot3({c, 0, 0, s}) - want)),
          1e-12);
  }

  {
    const SplitQuat q = split_exp({0, M_PI / 8, 0, 0});
    const double r2 = std::sqrt(2.0) / 2.0;
    Mat want(3, 3);
    want << 1, 0, 0, 0, r2, -r2, 0, r2, r2;
    h.add("covers.rot21_golden", max_abs(Mat(rot21(q) - want)), 1e-12);
  }

  h.add("covers.f_iso_bracket", f_iso_bracket_residual(), 1e-12);

  {
    // Two-to-one: the four covers identify exactly the antipodes.
    Rng rng = h.rng("covers.two_to_one");
    double res = 0.0;
    for (int t = 0; t < h.trials(); ++t) {
      Rng r = rng.split(t);
      const Quat q = sample_unit_quat(r);
      res = std::max(res,
                     max_abs(Mat(rot3(q) - rot3(qscale(-1.0, q)))));
      const SplitQuat sq = sample_unit_split_quat(r);
      res = std::max(res,
                     max_abs(Mat(rot21(sq) - rot21(sscale(-1.0, sq)))));
      const DualQuat dq = sample_unit_dual_quat(r);
      const DualQuat dqn{qscale(-1, dq.r), qscale(-1, dq.d)};
      res = std::max(
          res, max_abs(Mat((pi_cover(dq).m - pi_cover(dqn).m).real())));
      const DualSplitQuat ds = sample_unit_dual_split_quat(r);
      const DualSplitQuat dsn{sscale(-1, ds.r), sscale(-1, ds.d)};
      res = std::max(
          res, max_abs(Mat((pi21_cover(ds).m - pi21_cover(dsn).m).real())));
    }
    h.add("covers.two_to_one", res, 1e-12);
  }

  {
    // Kernel probes: +-1 map to the identity, and a quaternion a fixed small
    // angle away from the kernel lands measurably far from the identity.
    double res = 0.0;
    res = std::max(res,
                   max_abs(Mat(rot3({1, 0, 0, 0}) - Mat::Identity(3, 3))));
    res = std::max(res,
                   max_abs(Mat(rot3({-1, 0, 0, 0}) - Mat::Identity(3, 3))));
    const double a = 0.05;  // quarter-angle
    const Quat off{std::cos(a), std::sin(a), 0, 0};
    const double gap = max_abs(Mat(rot3(off) - Mat::Identity(3, 3)));
    res = std::max(res, gap > 1e-3 ? 0.0 : 1.0);
    h.add("covers.kernel_probe", res, 1e-12);
  }

  for (const auto& name : group_names()) {
    const GroupId id = group_from_name(name);
    const int n = group_algebra(id).dim;

    {
      Rng rng = h.rng("covers.explog." + name);
      double res = 0.0;
      for (int t = 0; t < h.trials(); ++t) {
        Rng r = rng.split(t);
        Vec x(n);
        for (int i = 0; i < n; ++i) x(i) = r.uniform(-0.5, 0.5);
        res = std::max(res,
                       max_abs(Vec(group_log(group_exp(id, x)) - x)));
      }
      h.add("covers.explog." + name, res, 1e-9);
    }

    {
      Rng rng = h.rng("covers.membership." + name);
      double res = 0.0;
      for (int t = 0; t < h.trials(); ++t) {
        Rng r = rng.split(t);
        res = std::max(res,
                       membership_residual(random_group_element(id, r)));
      }
      h.add("covers.membership." + name, res, 1e-10);
    }

    {
      Rng rng = h.rng("covers.adjoint_hom." + name);
      double res = 0.0;
      for (int t = 0; t < h.trials(); ++t) {
        Rng r = rng.split(t);
        const GroupElement a = random_group_element(id, r);
        const GroupElement b = random_group_element(id, r);
        res = std::max(
            res, max_abs(Mat(adjoint_rep(gmul(a, b)) -
                             adjoint_rep(a) * adjoint_rep(b))));
        res = std::max(
            res, max_abs(Mat(coadjoint_rep(gmul(a, b)) -
                             coadjoint_rep(a) * coadjoint_rep(b))));
      }
      h.add("covers.adjoint_hom." + name, res, 1e-9);
    }

    {
      Rng rng = h.rng("covers.adjoint_exp." + name);
      const LieAlgebra& L = group_algebra(id);
      double res = 0.0;
      for (int t = 0; t < std::min(h.trials(), 50); ++t) {
        Rng r = rng.split(t);
        Vec x(n);
        for (int i = 0; i < n; ++i) x(i) = r.uniform(-0.5, 0.5);
        res = std::max(res, max_abs(Mat(adjoint_rep(group_exp(id, x)) -
                                        expm(ad_matrix(L, x)))));
      }
      h.add("covers.adjoint_exp." + name, res, 1e-9);
    }
  }

  {
    // Finite-difference brackets of the double groups against the tangent /
    // cotangent structure constants.
    double res_t = 0.0, res_ct = 0.0;
    for (const std::string base : {"so3", "sl2"}) {
      const GroupId id = group_from_name(base);
      const LieAlgebra L = group_algebra(id);
      const LieAlgebra Lt = tangent_algebra(L);
      const LieAlgebra Lct = cotangent_algebra(L);
      const int n = L.dim;
      for (int a = 0; a < 2 * n; ++a)
        for (int b = a + 1; b < 2 * n; ++b) {
          Vec ea = Vec::Zero(2 * n), eb = Vec::Zero(2 * n);
          ea(a) = 1.0;
          eb(b) = 1.0;
          Vec want_t(2 * n), want_ct(2 * n);
          for (int k = 0; k < 2 * n; ++k) {
            want_t(k) = Lt.get(a, b, k);
            want_ct(k) = Lct.get(a, b, k);
          }
          const Vec got_t = semidirect_fd_bracket(
              id, SemiVariant::Adjoint, ea.head(n), ea.tail(n), eb.head(n),
              eb.tail(n));
          const Vec got_ct = semidirect_fd_bracket(
              id, SemiVariant::Coadjoint, ea.head(n), ea.tail(n), eb.head(n),
              eb.tail(n));
          res_t = std::max(res_t, max_abs(Vec(got_t - want_t)));
          res_ct = std::max(res_ct, max_abs(Vec(got_ct - want_ct)));
        }
    }
    h.add("covers.tangent_fd_bracket", res_t, 1e-6);
    h.add("covers.cotangent_fd_bracket", res_ct, 1e-6);
  }

  for (const std::string name : {"so3", "su2", "sl2", "so21", "so31"}) {
    const GroupId id = group_from_name(name);
    const std::string check = "covers.flat_equivariance." + name;
    const Mat K = killing_form(group_algebra(id));
    h.add(check,
          flat_equivariance_residual(id, K, std::min(h.trials(), 100),
                                     h.rng(check)),
          1e-9);
  }
}

// ------------------------------------------------------------------ metrics

void add_metrics_checks(Harness& h) {
  const LieAlgebra h3 = builtin_algebra("h3");

  {
    Rng rng = h.rng("metrics.h3_parallelism");
    double res = 0.0;
    for (int t = 0; t < std::min(h.trials(), 20); ++t) {
      Rng r = rng.split(t);
      H3MetricParams p{r.uniform(-2, 2), r.uniform(-2, 2), r.uniform(-2, 2),
                       r.uniform(-2, 2), r.uniform(-2, 2), r.uniform(-2, 2)};
      const CoordinateMetricField f = h3_metric_field(p);
      std::vector<Vec> pts;
      for (int k = 0; k < 25; ++k) {
        Vec x(3);
        x << r.uniform(-1, 1), r.uniform(-1, 1), r.uniform(-1, 1);
        pts.push_back(x);
      }
      res = std::max(res, parallelism_residual(f, h3, pts, 1e-5));
    }
    h.add("metrics.h3_parallelism", res, 1e-6);
  }

  {
    // Corrupting one off-diagonal coefficient must break parallelism.
    Rng rng = h.rng("metrics.h3_parallelism.control");
    Rng r = rng.split(0);
    const H3MetricParams p{1.3, -0.4, 0.7, 0.2, 1.1, 2.0};
    CoordinateMetricField f = h3_metric_field(p);
    const auto base_at = f.at;
    f.at = [base_at](const Vec& x) {
      Mat mu = base_at(x);
      mu(0, 1) *= 2.0;
      mu(1, 0) *= 2.0;
      return mu;
    };
    std::vector<Vec> pts;
    for (int k = 0; k < 25; ++k) {
      Vec x(3);
      x << r.uniform(-1, 1), r.uniform(-1, 1), r.uniform(-1, 1);
      pts.push_back(x);
    }
    const double res = parallelism_residual(f, h3, pts, 1e-5);
    h.add("metrics.h3_parallelism.control", res > 1e-3 ? 0.0 : 1.0, 0.5);
  }

  {
    Rng rng = h.rng("metrics.h3_det");
    double res = 0.0;
    for (int t = 0; t < h.trials(); ++t) {
      Rng r = rng.split(t);
      H3MetricParams p{r.uniform(-2, 2), r.uniform(-2, 2), r.uniform(-2, 2),
                       r.uniform(-2, 2), r.uniform(-2, 2), r.uniform(-2, 2)};
      const CoordinateMetricField f = h3_metric_field(p);
      Vec x(3);
      x << r.uniform(-2, 2), r.uniform(-2, 2), r.uniform(-2, 2);
      res = std::max(res, std::abs(f.at(x).determinant() -
                                   h3_metric_det(p)));
    }
    h.add("metrics.h3_det", res, 1e-10);
  }

  {
    const auto forms_h3 = ad_invariant_symmetric_forms(h3);
    h.add("metrics.h3_forms_dim",
          std::abs(static_cast<double>(forms_h3.size()) - 3.0), 0.5);

    Rng rng = h.rng("metrics.h3_forms_degenerate");
    double maxdet = 0.0;
    for (int t = 0; t < 500; ++t) {
      Rng r = rng.split(t);
      Vec c(static_cast<int>(forms_h3.size()));
      for (int i = 0; i < c.size(); ++i) c(i) = r.uniform(-1, 1);
      if (c.norm() < 1e-3) continue;
      c /= c.norm();
      Mat B = Mat::Zero(3, 3);
      for (int i = 0; i < c.size(); ++i) B += c(i) * forms_h3[i];
      maxdet = std::max(maxdet, std::abs(B.determinant()));
    }
    h.add("metrics.h3_forms_degenerate", maxdet, 1e-12);

    const auto forms_so31 =
        ad_invariant_symmetric_forms(builtin_algebra("so31"));
    h.add("metrics.so31_forms_dim",
          std::abs(static_cast<double>(forms_so31.size()) - 2.0), 0.5);
  }

  {
    Rng rng = h.rng("metrics.so31_family");
    const LieAlgebra so31 = builtin_algebra("so31");
    double res_det = 0.0, res_inv = 0.0;
    for (int t = 0; t < std::min(h.trials(), 50); ++t) {
      Rng r = rng.split(t);
      const double k1 = r.uniform(-2, 2), k2 = r.uniform(-2, 2);
      if (k1 * k1 + k2 * k2 < 0.01) continue;
      const Mat B = so31_metric(k1, k2);
      const double scale = std::pow(k1 * k1 + k2 * k2, 3);
      res_det = std::max(res_det, std::abs(B.determinant() -
                                           so31_metric_det(k1, k2)) /
                                      std::max(1.0, scale));
      res_inv = std::max(res_inv, ad_invariance_residual(so31, B));
    }
    h.add("metrics.so31_det", res_det, 1e-12);
    h.add("metrics.so31_ad_invariance", res_inv, 1e-12);
  }

  {
    const std::map<std::string, std::string> fams = {{"t*so3", "so3"},
                                                     {"t*su2", "su2"},
                                                     {"t*sl2", "sl2"},
                                                     {"t*so21", "so21"}};
    for (const auto& [fam, base] : fams) {
      const LieAlgebra L = builtin_algebra(base);
      Rng rng = h.rng("metrics.odd_eigen." + base);
      double res_eig = 0.0, res_sig = 0.0, res_inv = 0.0;
      const LieAlgebra Lct = cotangent_algebra(L);
      for (int t = 0; t < std::min(h.trials(), 50); ++t) {
        Rng r = rng.split(t);
        const double s = r.uniform(-2, 2);
        double tt = r.uniform(-2, 2);
        if (std::abs(tt) < 0.1) tt = tt < 0 ? tt - 0.1 : tt + 0.1;
        res_eig = std::max(res_eig, odd_metric_eigen_residual(L, s, tt));
        const Mat B = cotangent_metric_odd(L, s, tt);
        const Signature sig = signature_of(B);
        res_sig = std::max(
            res_sig, std::abs(sig.neg - L.dim) + std::abs(sig.pos - L.dim) +
                         std::abs(sig.zero - 0.0));
        res_inv = std::max(res_inv, ad_invariance_residual(Lct, B));
      }
      h.add("metrics.odd_eigen." + base, res_eig, 1e-10);
      h.add("metrics.odd_signature." + base, res_sig, 0.5);
      h.add("metrics.odd_ad_invariance." + base, res_inv, 1e-12);
    }
  }

  {
    Rng rng = h.rng("metrics.even_so31");
    const LieAlgebra Lct = cotangent_algebra(builtin_algebra("so31"));
    double res_sig = 0.0, res_inv = 0.0;
    for (int t = 0; t < std::min(h.trials(), 50); ++t) {
      Rng r = rng.split(t);
      const double s1 = r.uniform(-2, 2), s2 = r.uniform(-2, 2);
      double t1 = r.uniform(-2, 2), t2 = r.uniform(-2, 2);
      if (t1 * t1 + t2 * t2 < 0.01) t1 += 0.5;
      const Mat B = cotangent_metric_even_so31(s1, s2, t1, t2);
      const Signature sig = signature_of(B);
      res_sig = std::max(res_sig, std::abs(sig.neg - 6.0) +
                                      std::abs(sig.pos - 6.0));
      res_inv = std::max(res_inv, ad_invariance_residual(Lct, B));
    }
    h.add("metrics.even_signature_so31", res_sig, 0.5);
    h.add("metrics.even_ad_invariance_so31", res_inv, 1e-12);
  }
}

// ------------------------------------------------------------------- screws

void add_screws_checks(Harness& h) {
  {
    Rng rng = h.rng("screws.roundtrip");
    double res = 0.0;
    for (int t = 0; t < h.trials(); ++t) {
      Rng r = rng.split(t);
      const Twist xi{random_vec3(r, -2, 2), random_vec3(r, -2, 2)};
      const GroupElement g = twist_exp(MotionSpace::Euclidean, xi);
      const GroupElement g2 = screw_reconstruct(screw_decompose(g));
      res = std::max(res, max_abs(Mat((g.m - g2.m).real())));
    }
    h.add("screws.roundtrip", res, 1e-9);
  }

  {
    const Twist xi{{0, 0, M_PI / 2}, {0, 0, 1}};
    const auto s = screw_decompose(twist_exp(MotionSpace::Euclidean, xi));
    double res = std::abs(s.angle - M_PI / 2);
    res = std::max(res, (s.axis - Vec3::UnitZ()).cwiseAbs().maxCoeff());
    res = std::max(res, s.point.cwiseAbs().maxCoeff());
    res = std::max(res, std::abs(s.pitch - 2.0 / M_PI));
    res = std::max(res, s.pure_translation ? 1.0 : 0.0);
    h.add("screws.golden", res, 1e-12);
  }

  {
    Rng rng = h.rng("screws.pure_translation");
    double res = 0.0;
    for (int t = 0; t < h.trials(); ++t) {
      Rng r = rng.split(t);
      Vec3 v = random_vec3(r, -2, 2);
      if (v.norm() < 0.1) v = Vec3::UnitX();
      const auto s =
          screw_decompose(twist_exp(MotionSpace::Euclidean, {Vec3::Zero(), v}));
      res = std::max(res, s.pure_translation ? 0.0 : 1.0);
      res = std::max(res, std::abs(s.pitch - v.norm()));
      res = std::max(res, (s.axis - v.normalized()).cwiseAbs().maxCoeff());
    }
    h.add("screws.pure_translation", res, 1e-12);
  }

  {
    Rng rng = h.rng("screws.half_turn");
    double res = 0.0;
    for (int t = 0; t < h.trials(); ++t) {
      Rng r = rng.split(t);
      Vec3 u = random_vec3(r, -1, 1);
      if (u.norm() < 0.1) u = Vec3::UnitY();
      u.normalize();
      const Twist xi{Vec3(u * M_PI), random_vec3(r, -2, 2)};
      const GroupElement g = twist_exp(MotionSpace::Euclidean, xi);
      const GroupElement g2 = screw_reconstruct(screw_decompose(g));
      res = std::max(res, max_abs(Mat((g.m - g2.m).real())));
    }
    // Near a half turn the rotation angle is only sqrt(eps)-determined by the
    // trace, so reconstruction cannot do better than ~1e-8; 1e-6 has margin.
    h.add("screws.half_turn", res, 1e-6);
  }

  for (const auto sp : {MotionSpace::Euclidean, MotionSpace::Minkowski}) {
    const std::string sname =
        sp == MotionSpace::Euclidean ? "euclidean" : "minkowski";
    Rng rng = h.rng("screws.geodesic." + sname);
    double res = 0.0;
    for (int t = 0; t < 8; ++t) {
      Rng r = rng.split(t);
      const Twist xi{random_vec3(r, -0.8, 0.8), random_vec3(r, -1, 1)};
      const GroupElement g0 =
          random_group_element(motion_group(sp), r, 0.2);
      const double s = r.uniform(-1, 1);
      double tt = r.uniform(-1, 1);
      if (std::abs(tt) < 0.3) tt = tt < 0 ? tt - 0.3 : tt + 0.3;
      const Mat B = sp == MotionSpace::Euclidean ? se3_bundle_metric(s, tt)
                                                 : se21_bundle_metric(s, tt);
      res = std::max(res, geodesic_residual(sp, B, xi, g0));
    }
    h.add("screws.geodesic." + sname, res, 1e-4);
  }

  {
    // A non-invariant perturbation of the metric must break the geodesic
    // property of screws for at least one sampled twist.
    Rng rng = h.rng("screws.geodesic.control");
    double worst = 0.0;
    Mat B = se3_bundle_metric(0.7, 0.9);
    B(0, 0) += 0.4;
    for (int t = 0; t < 6; ++t) {
      Rng r = rng.split(t);
      const Twist xi{random_vec3(r, -0.8, 0.8), random_vec3(r, -1, 1)};
      const GroupElement g0 =
          random_group_element(GroupId::SE3, r, 0.2);
      worst = std::max(worst,
                       geodesic_residual(MotionSpace::Euclidean, B, xi, g0));
    }
    h.add("screws.geodesic.control", worst > 1e-2 ? 0.0 : 1.0, 0.5);
  }

  {
    const auto se = riemannian_obstruction_scan(MotionSpace::Euclidean);
    const auto sm = riemannian_obstruction_scan(MotionSpace::Minkowski);
    h.add("screws.obstruction_euclidean",
          std::abs(se.min_negative - 3.0), 0.5);
    h.add("screws.obstruction_minkowski",
          std::abs(sm.min_negative - 3.0), 0.5);
  }
}

}  // namespace

const std::vector<std::string>& check_suite_names() {
  static const std::vector<std::string> names = {"algebra", "quat", "covers",
                                                 "metrics", "screws", "all"};
  return names;
}

std::vector<CheckResult> run_checks(const std::string& suite,
                                    const CheckOptions& opt) {
  Harness h(opt);
  bool known = false;
  const bool all = suite == "all";
  if (all || suite == "algebra") known = true, add_algebra_checks(h);
  if (all || suite == "quat") known = true, add_quat_checks(h);
  if (all || suite == "covers") known = true, add_covers_checks(h);
  if (all || suite == "metrics") known = true, add_metrics_checks(h);
  if (all || suite == "screws") known = true, add_screws_checks(h);
  if (!known)
    throw UsageError("unknown check suite: " + suite +
                     " (expected algebra|quat|covers|metrics|screws|all)");
  return h.take();
}

}  // namespace cskit
