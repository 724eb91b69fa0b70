/**
 * @file isomaps.cpp
 * @brief Covers, isomorphisms, and the homomorphism-residual machinery.
 */
#include "cskit/isomaps.hpp"

#include <cmath>

#include "cskit/errors.hpp"

namespace cskit {

using namespace std::complex_literals;  // 1i in the matrix models below

// --------------------------------------------------------------- hat maps

Mat hat_F(const Vec3& a) {
  Mat m(3, 3);
  m << 0, -a.z(), a.y(),
       a.z(), 0, -a.x(),
      -a.y(), a.x(), 0;
  return m;
}

Vec3 vee_F(const Mat& m) { return {m(2, 1), m(0, 2), m(1, 0)}; }

Mat hat_H(const Vec3& a) {
  Mat m(3, 3);
  m << 0, a.z(), -a.y(),
       a.z(), 0, -a.x(),
      -a.y(), a.x(), 0;
  return m;
}

Vec3 vee_H(const Mat& m) { return {m(2, 1), -m(0, 2), m(0, 1)}; }

// -------------------------------------------------------------- psi, omega

CMat psi(const Quat& q) {
  CMat m(2, 2);
  m << q.w - 1i * q.x, -q.y + 1i * q.z,
       q.y + 1i * q.z, q.w + 1i * q.x;
  return m;
}

Quat psi_inv(const CMat& m) {
  return {0.5 * (m(0, 0).real() + m(1, 1).real()),
          0.5 * (m(1, 1).imag() - m(0, 0).imag()),
          0.5 * (m(1, 0).real() - m(0, 1).real()),
          0.5 * (m(1, 0).imag() + m(0, 1).imag())};
}

Mat omega_map(const SplitQuat& q) {
  Mat m(2, 2);
  m << q.w + q.z, q.x + q.y,
      -q.x + q.y, q.w - q.z;
  return m;
}

SplitQuat omega_inv(const Mat& m) {
  return {0.5 * (m(0, 0) + m(1, 1)), 0.5 * (m(0, 1) - m(1, 0)),
          0.5 * (m(0, 1) + m(1, 0)), 0.5 * (m(0, 0) - m(1, 1))};
}

// ------------------------------------------------------------------- f_iso

const std::vector<Mat>& f_iso_domain_basis() {
  static const std::vector<Mat> basis = [] {
    auto E = [](int i, int j) {
      Mat m = Mat::Zero(3, 3);
      m(i - 1, j - 1) = 1.0;
      return m;
    };
    return std::vector<Mat>{Mat(E(1, 2) + E(2, 1)), Mat(-(E(1, 3) + E(3, 1))),
                            Mat(E(3, 2) - E(2, 3))};
  }();
  return basis;
}

const std::vector<Mat>& f_iso_image_basis() {
  static const std::vector<Mat> basis = [] {
    const double s5 = std::sqrt(5.0);
    Mat F1(2, 2), F2(2, 2), F3(2, 2);
    F1 << s5 / 4.0, -0.5, 0.125, -s5 / 4.0;
    F2 << 0.0, -1.0, -0.25, 0.0;
    F3 << 0.25, -s5 / 2.0, s5 / 8.0, -0.25;
    return std::vector<Mat>{F1, F2, F3};
  }();
  return basis;
}

Mat f_iso(const Vec& x) {
  const auto& F = f_iso_image_basis();
  return x(0) * F[0] + x(1) * F[1] + x(2) * F[2];
}

double f_iso_bracket_residual() {
  const auto& F = f_iso_image_basis();
  auto comm = [](const Mat& a, const Mat& b) { return Mat(a * b - b * a); };
  // Domain relations: [E1,E2] = E3, [E1,E3] = E2, [E2,E3] = -E1.
  double r = 0.0;
  r = std::max(r, max_abs(Mat(comm(F[0], F[1]) - F[2])));
  r = std::max(r, max_abs(Mat(comm(F[0], F[2]) - F[1])));
  r = std::max(r, max_abs(Mat(comm(F[1], F[2]) + F[0])));
  return r;
}

// ------------------------------------------------------------------ covers

Mat rot3(const Quat& q) {
  const double w = q.w, x = q.x, y = q.y, z = q.z;
  Mat m(3, 3);
  m << w * w + x * x - y * y - z * z, 2 * (x * y - w * z), 2 * (w * y + x * z),
      2 * (w * z + x * y), w * w - x * x + y * y - z * z, 2 * (y * z - w * x),
      2 * (x * z - w * y), 2 * (w * x + y * z), w * w - x * x - y * y + z * z;
  return m;
}

Mat rot21(const SplitQuat& q) {
  const SplitQuat qi = sinv(q);
  Mat m(3, 3);
  const Vec3 units[3] = {Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
  for (int c = 0; c < 3; ++c) {
    const SplitQuat im = smul(smul(q, SplitQuat::pure(units[c])), qi);
    m.col(c) = im.vec();
  }
  return m;
}

namespace {
GroupElement make_motion(GroupId id, const Mat& block, const Vec3& u) {
  Mat g = Mat::Identity(4, 4);
  g.topLeftCorner(3, 3) = block;
  g.topRightCorner(3, 1) = u;
  return {id, g.cast<std::complex<double>>()};
}
}  // namespace

GroupElement pi_cover(const DualQuat& q) {
  const Vec3 u = qmul(q.d, qinv(q.r)).vec();
  return make_motion(GroupId::SE3, rot3(q.r), u);
}

GroupElement pi21_cover(const DualSplitQuat& q) {
  const Vec3 u = smul(q.d, sinv(q.r)).vec();
  return make_motion(GroupId::SE21, rot21(q.r), u);
}

SemidirectElement phibar(const DualQuat& q) {
  const Vec3 u = qmul(q.d, qinv(q.r)).vec();
  // psi(pure u) has coordinates u in the X-basis, and the invariant trace
  // form tr(X_i X_j) = -2 delta_ij lowers the index.
  return {{GroupId::SU2, psi(q.r)}, -2.0 * Vec(u), SemiVariant::Coadjoint};
}

SemidirectElement p_iso(const DualSplitQuat& q) {
  const Vec3 u = smul(q.d, sinv(q.r)).vec();
  const Mat x = omega_map(SplitQuat::pure(u));  // traceless: lands in sl2
  return {{GroupId::SL2R, omega_map(q.r).cast<std::complex<double>>()},
          algebra_coords(GroupId::SL2R, x.cast<std::complex<double>>()),
          SemiVariant::Adjoint};
}

// --------------------------------------------------------- index lowering

Vec theta_flat(const LieAlgebra& L, const Vec& x) {
  return killing_form(L) * x;
}

Vec theta_sharp(const LieAlgebra& L, const Vec& f) {
  const Mat K = killing_form(L);
  Eigen::FullPivLU<Mat> lu(K);
  lu.setThreshold(1e-10);
  if (!lu.isInvertible())
    throw DegenerateError("Killing form of " + L.name +
                          " is singular; no index raising");
  return lu.solve(f);
}

double flat_equivariance_residual(GroupId id, const Mat& B, int trials,
                                  Rng rng) {
  double res = 0.0;
  for (int t = 0; t < trials; ++t) {
    Rng r = rng.split(t);
    const GroupElement g = random_group_element(id, r);
    const Mat ad = adjoint_rep(g);
    const Mat coad = coadjoint_rep(g);
    Vec x(B.cols());
    for (int i = 0; i < x.size(); ++i) x(i) = r.uniform(-1.0, 1.0);
    res = std::max(res, max_abs(Vec(B * (ad * x) - coad * (B * x))));
  }
  return res;
}

GroupElement T_iso(const SemidirectElement& a) {
  if (a.sigma.id != GroupId::SO3 || a.variant != SemiVariant::Coadjoint)
    throw UsageError("T expects a cotangent element over so3");
  const Vec x = theta_sharp(group_algebra(GroupId::SO3), a.payload);
  const Vec3 v = vee_F(algebra_element_matrix(GroupId::SO3, x).real());
  return make_motion(GroupId::SE3, a.sigma.m.real(), v);
}

GroupElement Tprime_iso(const SemidirectElement& a) {
  if (a.sigma.id != GroupId::SO21 || a.variant != SemiVariant::Coadjoint)
    throw UsageError("T' expects a cotangent element over so21");
  const Vec x = theta_sharp(group_algebra(GroupId::SO21), a.payload);
  const Vec3 v = vee_H(algebra_element_matrix(GroupId::SO21, x).real());
  return make_motion(GroupId::SE21, a.sigma.m.real(), v);
}

SemidirectElement Phi_iso(const SemidirectElement& a) {
  if (a.variant != SemiVariant::Adjoint)
    throw UsageError("Phi expects a tangent-group element");
  const LieAlgebra& L = group_algebra(a.sigma.id);
  const Mat K = killing_form(L);
  Eigen::FullPivLU<Mat> lu(K);
  lu.setThreshold(1e-10);
  if (!lu.isInvertible())
    throw DegenerateError("Phi needs a nondegenerate Killing form");
  return {a.sigma, K * a.payload, SemiVariant::Coadjoint};
}

// ------------------------------------------------------------- flattening

Vec flatten_group(const GroupElement& g) {
  const int s = group_matrix_size(g.id);
  const bool cx = (g.id == GroupId::SU2);
  Vec out(cx ? 2 * s * s : s * s);
  int t = 0;
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c) {
      if (cx) {
        out(t++) = g.m(r, c).real();
        out(t++) = g.m(r, c).imag();
      } else {
        out(t++) = g.m(r, c).real();
      }
    }
  return out;
}

GroupElement unflatten_group(GroupId id, const Vec& v) {
  const int s = group_matrix_size(id);
  const bool cx = (id == GroupId::SU2);
  CMat m(s, s);
  int t = 0;
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c) {
      if (cx) {
        m(r, c) = std::complex<double>(v(t), v(t + 1));
        t += 2;
      } else {
        m(r, c) = v(t++);
      }
    }
  return {id, m};
}

Vec flatten_semidirect(const SemidirectElement& s) {
  const Vec g = flatten_group(s.sigma);
  Vec out(g.size() + s.payload.size());
  out.head(g.size()) = g;
  out.tail(s.payload.size()) = s.payload;
  return out;
}

SemidirectElement unflatten_semidirect(GroupId id, SemiVariant variant,
                                       const Vec& v) {
  const int s = group_matrix_size(id);
  const int gsize = (id == GroupId::SU2) ? 2 * s * s : s * s;
  SemidirectElement out;
  out.sigma = unflatten_group(id, v.head(gsize));
  out.payload = v.tail(v.size() - gsize);
  out.variant = variant;
  return out;
}

// --------------------------------------------------------------- sampling

double sample_normal(Rng& rng) {
  const double u1 = 1.0 - rng.uniform01();  // (0, 1]
  const double u2 = rng.uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Quat sample_unit_quat(Rng& rng) {
  while (true) {
    const double a = sample_normal(rng), b = sample_normal(rng),
                 c = sample_normal(rng), d = sample_normal(rng);
    const double n = std::sqrt(a * a + b * b + c * c + d * d);
    if (n > 1e-6) return {a / n, b / n, c / n, d / n};
  }
}

SplitQuat sample_unit_split_quat(Rng& rng) {
  while (true) {
    const SplitQuat q{sample_normal(rng), sample_normal(rng),
                      sample_normal(rng), sample_normal(rng)};
    const double n2 = snorm2(q);
    if (n2 < 0.1) continue;  // need the <Q,Q> = +1 component, away from null
    return sscale(1.0 / std::sqrt(n2), q);
  }
}

DualQuat sample_unit_dual_quat(Rng& rng) {
  const Quat r = sample_unit_quat(rng);
  const Vec3 u(sample_normal(rng), sample_normal(rng), sample_normal(rng));
  return unit_dq_from_pose(r, u);
}

DualSplitQuat sample_unit_dual_split_quat(Rng& rng) {
  const SplitQuat r = sample_unit_split_quat(rng);
  const Vec3 u(sample_normal(rng), sample_normal(rng), sample_normal(rng));
  return unit_dsq_from_pose(r, u);
}

// ------------------------------------------------------------- descriptors

namespace {

Vec quat_to_vec(const Quat& q) {
  Vec v(4);
  v << q.w, q.x, q.y, q.z;
  return v;
}
Quat vec_to_quat(const Vec& v) { return {v(0), v(1), v(2), v(3)}; }

Vec squat_to_vec(const SplitQuat& q) {
  Vec v(4);
  v << q.w, q.x, q.y, q.z;
  return v;
}
SplitQuat vec_to_squat(const Vec& v) { return {v(0), v(1), v(2), v(3)}; }

Vec dq_to_vec(const DualQuat& q) {
  Vec v(8);
  v << q.r.w, q.r.x, q.r.y, q.r.z, q.d.w, q.d.x, q.d.y, q.d.z;
  return v;
}
DualQuat vec_to_dq(const Vec& v) {
  return {{v(0), v(1), v(2), v(3)}, {v(4), v(5), v(6), v(7)}};
}

Vec dsq_to_vec(const DualSplitQuat& q) {
  Vec v(8);
  v << q.r.w, q.r.x, q.r.y, q.r.z, q.d.w, q.d.x, q.d.y, q.d.z;
  return v;
}
DualSplitQuat vec_to_dsq(const Vec& v) {
  return {{v(0), v(1), v(2), v(3)}, {v(4), v(5), v(6), v(7)}};
}

/// Raw matrix-group product (no drift exception -- the defect, if any, is
/// what hom_residual measures).
Vec group_mul_raw(GroupId id, const Vec& a, const Vec& b) {
  const GroupElement ga = unflatten_group(id, a);
  const GroupElement gb = unflatten_group(id, b);
  return flatten_group({id, CMat(ga.m * gb.m)});
}

Vec semidirect_mul_raw(GroupId id, SemiVariant var, const Vec& a,
                       const Vec& b) {
  const SemidirectElement sa = unflatten_semidirect(id, var, a);
  const SemidirectElement sb = unflatten_semidirect(id, var, b);
  const Mat act = var == SemiVariant::Adjoint ? adjoint_rep(sa.sigma)
                                              : coadjoint_rep(sa.sigma);
  SemidirectElement out{{id, CMat(sa.sigma.m * sb.sigma.m)},
                        Vec(sa.payload + act * sb.payload),
                        var};
  return flatten_semidirect(out);
}

MapDescriptor make_unit_quat_to_group(const std::string& name,
                                      const std::string& doc, GroupId codomain,
                                      std::function<Vec(const Quat&)> apply) {
  MapDescriptor d;
  d.name = name;
  d.doc = doc;
  d.sample = [](Rng& rng) { return quat_to_vec(sample_unit_quat(rng)); };
  d.domain_mul = [](const Vec& a, const Vec& b) {
    return quat_to_vec(qmul(vec_to_quat(a), vec_to_quat(b)));
  };
  d.apply = [apply](const Vec& v) { return apply(vec_to_quat(v)); };
  d.codomain_mul = [codomain](const Vec& a, const Vec& b) {
    return group_mul_raw(codomain, a, b);
  };
  d.codomain_membership = [codomain](const Vec& v) {
    return membership_residual(unflatten_group(codomain, v));
  };
  return d;
}

MapDescriptor make_unit_split_to_group(
    const std::string& name, const std::string& doc, GroupId codomain,
    std::function<Vec(const SplitQuat&)> apply) {
  MapDescriptor d;
  d.name = name;
  d.doc = doc;
  d.sample = [](Rng& rng) {
    return squat_to_vec(sample_unit_split_quat(rng));
  };
  d.domain_mul = [](const Vec& a, const Vec& b) {
    return squat_to_vec(smul(vec_to_squat(a), vec_to_squat(b)));
  };
  d.apply = [apply](const Vec& v) { return apply(vec_to_squat(v)); };
  d.codomain_mul = [codomain](const Vec& a, const Vec& b) {
    return group_mul_raw(codomain, a, b);
  };
  d.codomain_membership = [codomain](const Vec& v) {
    return membership_residual(unflatten_group(codomain, v));
  };
  return d;
}

std::vector<MapDescriptor> build_registry() {
  std::vector<MapDescriptor> reg;

  reg.push_back(make_unit_quat_to_group(
      "psi", "unit quaternions -> SU(2)", GroupId::SU2, [](const Quat& q) {
        return flatten_group({GroupId::SU2, psi(q)});
      }));

  reg.push_back(make_unit_quat_to_group(
      "rot3", "unit quaternions -> SO(3), the 2:1 cover", GroupId::SO3,
      [](const Quat& q) {
        return flatten_group(
            {GroupId::SO3, rot3(q).cast<std::complex<double>>()});
      }));

  reg.push_back(make_unit_split_to_group(
      "omega", "unit split quaternions -> SL(2,R)", GroupId::SL2R,
      [](const SplitQuat& q) {
        return flatten_group(
            {GroupId::SL2R, omega_map(q).cast<std::complex<double>>()});
      }));

  reg.push_back(make_unit_split_to_group(
      "rot21", "unit split quaternions -> SO(2,1), the 2:1 cover",
      GroupId::SO21, [](const SplitQuat& q) {
        return flatten_group(
            {GroupId::SO21, rot21(q).cast<std::complex<double>>()});
      }));

  {
    MapDescriptor d;
    d.name = "pi";
    d.doc = "unit dual quaternions -> SE(3)";
    d.sample = [](Rng& rng) { return dq_to_vec(sample_unit_dual_quat(rng)); };
    d.domain_mul = [](const Vec& a, const Vec& b) {
      return dq_to_vec(dmul(vec_to_dq(a), vec_to_dq(b)));
    };
    d.apply = [](const Vec& v) {
      return flatten_group(pi_cover(vec_to_dq(v)));
    };
    d.codomain_mul = [](const Vec& a, const Vec& b) {
      return group_mul_raw(GroupId::SE3, a, b);
    };
    d.codomain_membership = [](const Vec& v) {
      return membership_residual(unflatten_group(GroupId::SE3, v));
    };
    reg.push_back(std::move(d));
  }

  {
    MapDescriptor d;
    d.name = "pi21";
    d.doc = "unit dual split quaternions -> SE(2,1)";
    d.sample = [](Rng& rng) {
      return dsq_to_vec(sample_unit_dual_split_quat(rng));
    };
    d.domain_mul = [](const Vec& a, const Vec& b) {
      return dsq_to_vec(dmul(vec_to_dsq(a), vec_to_dsq(b)));
    };
    d.apply = [](const Vec& v) {
      return flatten_group(pi21_cover(vec_to_dsq(v)));
    };
    d.codomain_mul = [](const Vec& a, const Vec& b) {
      return group_mul_raw(GroupId::SE21, a, b);
    };
    d.codomain_membership = [](const Vec& v) {
      return membership_residual(unflatten_group(GroupId::SE21, v));
    };
    reg.push_back(std::move(d));
  }

  {
    MapDescriptor d;
    d.name = "p";
    d.doc = "unit dual split quaternions -> T SL(2,R)";
    d.sample = [](Rng& rng) {
      return dsq_to_vec(sample_unit_dual_split_quat(rng));
    };
    d.domain_mul = [](const Vec& a, const Vec& b) {
      return dsq_to_vec(dmul(vec_to_dsq(a), vec_to_dsq(b)));
    };
    d.apply = [](const Vec& v) {
      return flatten_semidirect(p_iso(vec_to_dsq(v)));
    };
    d.codomain_mul = [](const Vec& a, const Vec& b) {
      return semidirect_mul_raw(GroupId::SL2R, SemiVariant::Adjoint, a, b);
    };
    d.codomain_membership = [](const Vec& v) {
      return semidirect_membership_residual(
          unflatten_semidirect(GroupId::SL2R, SemiVariant::Adjoint, v));
    };
    reg.push_back(std::move(d));
  }

  {
    MapDescriptor d;
    d.name = "phibar";
    d.doc = "unit dual quaternions -> T*SU(2)";
    d.sample = [](Rng& rng) { return dq_to_vec(sample_unit_dual_quat(rng)); };
    d.domain_mul = [](const Vec& a, const Vec& b) {
      return dq_to_vec(dmul(vec_to_dq(a), vec_to_dq(b)));
    };
    d.apply = [](const Vec& v) {
      return flatten_semidirect(phibar(vec_to_dq(v)));
    };
    d.codomain_mul = [](const Vec& a, const Vec& b) {
      return semidirect_mul_raw(GroupId::SU2, SemiVariant::Coadjoint, a, b);
    };
    d.codomain_membership = [](const Vec& v) {
      return semidirect_membership_residual(
          unflatten_semidirect(GroupId::SU2, SemiVariant::Coadjoint, v));
    };
    reg.push_back(std::move(d));
  }

  auto make_cotangent_to_motion =
      [](const std::string& name, const std::string& doc, GroupId base,
         GroupId codomain,
         std::function<GroupElement(const SemidirectElement&)> fn) {
        MapDescriptor d;
        d.name = name;
        d.doc = doc;
        d.sample = [base](Rng& rng) {
          SemidirectElement s;
          s.sigma = random_group_element(base, rng);
          s.payload = Vec(3);
          for (int i = 0; i < 3; ++i) s.payload(i) = sample_normal(rng);
          s.variant = SemiVariant::Coadjoint;
          return flatten_semidirect(s);
        };
        d.domain_mul = [base](const Vec& a, const Vec& b) {
          return semidirect_mul_raw(base, SemiVariant::Coadjoint, a, b);
        };
        d.apply = [base, fn](const Vec& v) {
          return flatten_group(
              fn(unflatten_semidirect(base, SemiVariant::Coadjoint, v)));
        };
        d.codomain_mul = [codomain](const Vec& a, const Vec& b) {
          return group_mul_raw(codomain, a, b);
        };
        d.codomain_membership = [codomain](const Vec& v) {
          return membership_residual(unflatten_group(codomain, v));
        };
        return d;
      };

  reg.push_back(make_cotangent_to_motion(
      "T", "T*SO(3) -> SE(3)", GroupId::SO3, GroupId::SE3, T_iso));
  reg.push_back(make_cotangent_to_motion(
      "Tprime", "T*SO(2,1) -> SE(2,1)", GroupId::SO21, GroupId::SE21,
      Tprime_iso));

  {
    MapDescriptor d;
    d.name = "Phi";
    d.doc = "T SO(3) -> T*SO(3), index lowering on the fiber";
    d.sample = [](Rng& rng) {
      SemidirectElement s;
      s.sigma = random_group_element(GroupId::SO3, rng);
      s.payload = Vec(3);
      for (int i = 0; i < 3; ++i) s.payload(i) = sample_normal(rng);
      s.variant = SemiVariant::Adjoint;
      return flatten_semidirect(s);
    };
    d.domain_mul = [](const Vec& a, const Vec& b) {
      return semidirect_mul_raw(GroupId::SO3, SemiVariant::Adjoint, a, b);
    };
    d.apply = [](const Vec& v) {
      return flatten_semidirect(
          Phi_iso(unflatten_semidirect(GroupId::SO3, SemiVariant::Adjoint, v)));
    };
    d.codomain_mul = [](const Vec& a, const Vec& b) {
      return semidirect_mul_raw(GroupId::SO3, SemiVariant::Coadjoint, a, b);
    };
    d.codomain_membership = [](const Vec& v) {
      return semidirect_membership_residual(
          unflatten_semidirect(GroupId::SO3, SemiVariant::Coadjoint, v));
    };
    reg.push_back(std::move(d));
  }

  return reg;
}

}  // namespace

const std::vector<MapDescriptor>& iso_registry() {
  static const std::vector<MapDescriptor> reg = build_registry();
  return reg;
}

const MapDescriptor& find_map(const std::string& name) {
  for (const auto& d : iso_registry())
    if (d.name == name) return d;
  throw UsageError("unknown map: " + name);
}

double hom_residual(const MapDescriptor& map, int trials, Rng rng) {
  double res = 0.0;
  for (int t = 0; t < trials; ++t) {
    Rng r = rng.split(t);
    const Vec a = map.sample(r);
    const Vec b = map.sample(r);
    const Vec fa = map.apply(a);
    const Vec fb = map.apply(b);
    const Vec fab = map.apply(map.domain_mul(a, b));
    const Vec prod = map.codomain_mul(fa, fb);
    res = std::max(res, (fab - prod).cwiseAbs().maxCoeff());
    res = std::max(res, map.codomain_membership(fa));
  }
  return res;
}

}  // namespace cskit
