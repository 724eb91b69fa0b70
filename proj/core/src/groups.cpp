/**
 * @file groups.cpp
 * @brief Matrix group operations.
 */
#include "cskit/groups.hpp"

#include <cmath>
#include <complex>

#include "cskit/errors.hpp"
#include "cskit/isomaps.hpp"

namespace cskit {

namespace {

using namespace std::complex_literals;

constexpr double kDriftTol = 1e-8;

Mat eta3() { return Eigen::Vector3d(1, -1, -1).asDiagonal(); }
Mat eta4() { return Eigen::Vector4d(1, 1, 1, -1).asDiagonal(); }

CMat real_to_cmat(const Mat& m) { return m.cast<std::complex<double>>(); }

CMat embed_block(const Mat& a, const Eigen::Vector3d& p) {
  Mat g = Mat::Identity(4, 4);
  g.topLeftCorner(3, 3) = a;
  g.topRightCorner(3, 1) = p;
  return real_to_cmat(g);
}

struct GroupInfo {
  LieAlgebra algebra;
  std::vector<CMat> basis;
  int msize = 0;
  bool is_complex = false;
  Mat flat;  // stacked [re; im] of basis matrices, one column per generator
  Eigen::ColPivHouseholderQR<Mat> coord_solver;
};

Mat flatten_cmat(const CMat& m) {
  const int s = static_cast<int>(m.rows() * m.cols());
  Mat out(2 * s, 1);
  int t = 0;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      out(t, 0) = m(r, c).real();
      out(s + t, 0) = m(r, c).imag();
      ++t;
    }
  return out;
}

GroupInfo make_info(const std::string& algebra_name, int msize,
                    bool is_complex, std::vector<CMat> basis) {
  GroupInfo info;
  info.algebra = builtin_algebra(algebra_name);
  info.basis = std::move(basis);
  info.msize = msize;
  info.is_complex = is_complex;
  const int n = static_cast<int>(info.basis.size());
  info.flat.resize(2 * msize * msize, n);
  for (int i = 0; i < n; ++i) info.flat.col(i) = flatten_cmat(info.basis[i]);
  info.coord_solver.compute(info.flat);
  return info;
}

const GroupInfo& group_info(GroupId id) {
  static const std::vector<GroupInfo> registry = [] {
    std::vector<GroupInfo> reg;
    const double r2 = std::sqrt(2.0);

    // SO3: f_i = hat_F(e_i)/sqrt2.
    {
      std::vector<CMat> basis;
      for (int i = 0; i < 3; ++i)
        basis.push_back(
            real_to_cmat(hat_F(Eigen::Vector3d::Unit(i)) / r2));
      reg.push_back(make_info("so3", 3, false, std::move(basis)));
    }
    // SU2: X1 = diag(-i, i), X2 = E21 - E12, X3 = i(E12 + E21).
    {
      CMat X1(2, 2), X2(2, 2), X3(2, 2);
      X1 << -1i, 0, 0, 1i;
      X2 << 0, -1, 1, 0;
      X3 << 0, 1i, 1i, 0;
      reg.push_back(make_info("su2", 2, true, {X1, X2, X3}));
    }
    // SL2R: the basis from the sl2 table, Killing = diag(-1,1,1).
    {
      Mat e1(2, 2), e2(2, 2), e3(2, 2);
      e1 << 0, 1, -1, 0;
      e2 << 1, 0, 0, -1;
      e3 << 0, 1, 1, 0;
      const double s = r2 / 4.0;
      reg.push_back(make_info(
          "sl2", 2, false,
          {real_to_cmat(s * e1), real_to_cmat(s * e2), real_to_cmat(s * e3)}));
    }
    // SO21: e1' = (r2/2)(E23-E32), e2' = (r2/2)(E13+E31),
    //       e3' = -(r2/2)(E12+E21);  equals -hat_H(e_i)/sqrt2.
    {
      std::vector<CMat> basis;
      for (int i = 0; i < 3; ++i)
        basis.push_back(
            real_to_cmat(-hat_H(Eigen::Vector3d::Unit(i)) / r2));
      reg.push_back(make_info("so21", 3, false, std::move(basis)));
    }
    // SO31: S1..S3 boosts, S4..S6 rotations.
    {
      auto E = [](int i, int j) {
        Mat m = Mat::Zero(4, 4);
        m(i - 1, j - 1) = 1.0;
        return m;
      };
      std::vector<CMat> basis = {
          real_to_cmat(E(1, 4) + E(4, 1)), real_to_cmat(E(2, 4) + E(4, 2)),
          real_to_cmat(E(3, 4) + E(4, 3)), real_to_cmat(E(2, 3) - E(3, 2)),
          real_to_cmat(E(3, 1) - E(1, 3)), real_to_cmat(E(2, 1) - E(1, 2))};
      reg.push_back(make_info("so31", 4, false, std::move(basis)));
    }
    // H3: strictly upper triangular generators.
    {
      auto E = [](int i, int j) {
        Mat m = Mat::Zero(3, 3);
        m(i - 1, j - 1) = 1.0;
        return m;
      };
      reg.push_back(make_info("h3", 3, false,
                              {real_to_cmat(E(1, 2)), real_to_cmat(E(2, 3)),
                               real_to_cmat(E(1, 3))}));
    }
    // SE3 / SE21: three rotation generators (unscaled hat matrices) followed
    // by three translations.
    for (const bool minkowski : {false, true}) {
      std::vector<CMat> basis;
      for (int i = 0; i < 3; ++i) {
        Mat g = Mat::Zero(4, 4);
        g.topLeftCorner(3, 3) = minkowski ? hat_H(Eigen::Vector3d::Unit(i))
                                          : hat_F(Eigen::Vector3d::Unit(i));
        basis.push_back(real_to_cmat(g));
      }
      for (int i = 0; i < 3; ++i) {
        Mat g = Mat::Zero(4, 4);
        g(i, 3) = 1.0;
        basis.push_back(real_to_cmat(g));
      }
      reg.push_back(
          make_info(minkowski ? "se21" : "se3", 4, false, std::move(basis)));
    }
    return reg;
  }();
  return registry[static_cast<int>(id)];
}

// Rodrigues rotation for hat_F(w); theta = |w|.
Mat rodrigues(const Eigen::Vector3d& w) {
  const double th = w.norm();
  const Mat W = hat_F(w);
  if (th < 1e-12) return Mat::Identity(3, 3) + W;
  return Mat::Identity(3, 3) + (std::sin(th) / th) * W +
         ((1.0 - std::cos(th)) / (th * th)) * W * W;
}

// Exponential of hat_H(w) using H^3 = -K H with K = <w,w> Minkowski.
Mat rodrigues_minkowski(const Eigen::Vector3d& w) {
  const double K = minkowski_dot(w, w);
  const Mat H = hat_H(w);
  const Mat I = Mat::Identity(3, 3);
  if (std::abs(K) < 1e-14) return I + H + 0.5 * H * H;
  if (K > 0) {
    const double th = std::sqrt(K);
    return I + (std::sin(th) / th) * H +
           ((1.0 - std::cos(th)) / (th * th)) * H * H;
  }
  const double ph = std::sqrt(-K);
  return I + (std::sinh(ph) / ph) * H +
         ((std::cosh(ph) - 1.0) / (ph * ph)) * H * H;
}

// Integral of the exponential: V = int_0^1 exp(s hat(w)) ds, so that
// exp([[hat(w), v],[0,0]]) = [[R, V v],[0,1]].
Mat motion_V(const Mat& H, double K) {
  const Mat I = Mat::Identity(3, 3);
  if (std::abs(K) < 1e-14) return I + 0.5 * H + (1.0 / 6.0) * H * H;
  if (K > 0) {
    const double th = std::sqrt(K);
    return I + ((1.0 - std::cos(th)) / (th * th)) * H +
           ((th - std::sin(th)) / (th * th * th)) * H * H;
  }
  const double ph = std::sqrt(-K);
  return I + ((std::cosh(ph) - 1.0) / (ph * ph)) * H +
         ((std::sinh(ph) - ph) / (ph * ph * ph)) * H * H;
}

Eigen::Vector3d so3_log_vee(const Mat& R) {
  const double c = std::min(1.0, std::max(-1.0, (R.trace() - 1.0) / 2.0));
  const double th = std::acos(c);
  if (th > M_PI - 1e-3)
    throw ChartOverflowError("rotation angle too close to pi for the chart");
  Eigen::Vector3d axis_times(R(2, 1) - R(1, 2), R(0, 2) - R(2, 0),
                             R(1, 0) - R(0, 1));
  if (th < 1e-8) {
    // sin(th)/th ~ 1 - th^2/6
    return 0.5 * axis_times * (1.0 + th * th / 6.0);
  }
  return (th / (2.0 * std::sin(th))) * axis_times;
}

// Principal matrix logarithm with verification; used for the groups without
// a convenient closed form.
Mat verified_logm(const Mat& g) {
  const Mat L = logm(g);
  if (!L.allFinite() || (expm(L) - g).cwiseAbs().maxCoeff() >
                            1e-8 * std::max(1.0, g.cwiseAbs().maxCoeff()))
    throw ChartOverflowError("principal matrix logarithm unavailable");
  return L;
}

}  // namespace

GroupId group_from_name(const std::string& name) {
  if (name == "so3") return GroupId::SO3;
  if (name == "su2") return GroupId::SU2;
  if (name == "sl2" || name == "sl2r") return GroupId::SL2R;
  if (name == "so21") return GroupId::SO21;
  if (name == "so31") return GroupId::SO31;
  if (name == "h3") return GroupId::H3;
  if (name == "se3") return GroupId::SE3;
  if (name == "se21") return GroupId::SE21;
  throw UsageError("unknown group: " + name);
}

std::string group_name(GroupId id) {
  switch (id) {
    case GroupId::SO3: return "so3";
    case GroupId::SU2: return "su2";
    case GroupId::SL2R: return "sl2";
    case GroupId::SO21: return "so21";
    case GroupId::SO31: return "so31";
    case GroupId::H3: return "h3";
    case GroupId::SE3: return "se3";
    case GroupId::SE21: return "se21";
  }
  throw UsageError("bad group id");
}

std::vector<std::string> group_names() {
  return {"so3", "su2", "sl2", "so21", "so31", "h3", "se3", "se21"};
}

int group_matrix_size(GroupId id) { return group_info(id).msize; }

const LieAlgebra& group_algebra(GroupId id) { return group_info(id).algebra; }

const std::vector<CMat>& group_algebra_basis(GroupId id) {
  return group_info(id).basis;
}

GroupElement group_identity(GroupId id) {
  const int s = group_matrix_size(id);
  return {id, CMat::Identity(s, s)};
}

double membership_residual(const GroupElement& g) {
  const GroupInfo& info = group_info(g.id);
  double res = 0.0;
  if (!info.is_complex) res = max_abs(Mat(g.m.imag()));
  const Mat m = g.m.real();
  switch (g.id) {
    case GroupId::SO3: {
      res = std::max(res, max_abs(Mat(m.transpose() * m - Mat::Identity(3, 3))));
      res = std::max(res, std::abs(m.determinant() - 1.0));
      break;
    }
    case GroupId::SU2: {
      const CMat u = g.m;
      res = std::max(res,
                     max_abs(CMat(u.adjoint() * u - CMat::Identity(2, 2))));
      res = std::max(res, std::abs(u.determinant() - 1.0));
      break;
    }
    case GroupId::SL2R:
      res = std::max(res, std::abs(m.determinant() - 1.0));
      break;
    case GroupId::SO21: {
      const Mat eta = eta3();
      res = std::max(res, max_abs(Mat(m.transpose() * eta * m - eta)));
      res = std::max(res, std::abs(m.determinant() - 1.0));
      break;
    }
    case GroupId::SO31: {
      const Mat eta = eta4();
      res = std::max(res, max_abs(Mat(m.transpose() * eta * m - eta)));
      res = std::max(res, std::abs(m.determinant() - 1.0));
      break;
    }
    case GroupId::H3: {
      for (int i = 0; i < 3; ++i)
        res = std::max(res, std::abs(m(i, i) - 1.0));
      res = std::max({res, std::abs(m(1, 0)), std::abs(m(2, 0)),
                      std::abs(m(2, 1))});
      break;
    }
    case GroupId::SE3:
    case GroupId::SE21: {
      GroupElement block{g.id == GroupId::SE3 ? GroupId::SO3 : GroupId::SO21,
                         real_to_cmat(Mat(m.topLeftCorner(3, 3)))};
      res = std::max(res, membership_residual(block));
      res = std::max({res, std::abs(m(3, 0)), std::abs(m(3, 1)),
                      std::abs(m(3, 2)), std::abs(m(3, 3) - 1.0)});
      break;
    }
  }
  return res;
}

GroupElement gmul(const GroupElement& a, const GroupElement& b) {
  if (a.id != b.id) throw UsageError("product of elements of different groups");
  GroupElement out{a.id, a.m * b.m};
  const double drift = membership_residual(out);
  if (drift > kDriftTol)
    throw GroupDriftError("group product drifted off the manifold: residual " +
                          std::to_string(drift));
  return out;
}

GroupElement ginv(const GroupElement& g) {
  const Mat m = g.m.real();
  switch (g.id) {
    case GroupId::SO3:
      return {g.id, real_to_cmat(Mat(m.transpose()))};
    case GroupId::SU2:
      return {g.id, g.m.adjoint()};
    case GroupId::SL2R: {
      Mat inv(2, 2);
      inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
      return {g.id, real_to_cmat(inv)};
    }
    case GroupId::SO21:
      return {g.id, real_to_cmat(Mat(eta3() * m.transpose() * eta3()))};
    case GroupId::SO31:
      return {g.id, real_to_cmat(Mat(eta4() * m.transpose() * eta4()))};
    case GroupId::H3: {
      Mat inv = Mat::Identity(3, 3);
      inv(0, 1) = -m(0, 1);
      inv(1, 2) = -m(1, 2);
      inv(0, 2) = m(0, 1) * m(1, 2) - m(0, 2);
      return {g.id, real_to_cmat(inv)};
    }
    case GroupId::SE3:
    case GroupId::SE21: {
      const GroupElement block{
          g.id == GroupId::SE3 ? GroupId::SO3 : GroupId::SO21,
          real_to_cmat(Mat(m.topLeftCorner(3, 3)))};
      const Mat ai = ginv(block).m.real();
      return {g.id, embed_block(ai, -ai * m.topRightCorner(3, 1))};
    }
  }
  throw UsageError("bad group id");
}

CMat algebra_element_matrix(GroupId id, const Vec& xi) {
  const GroupInfo& info = group_info(id);
  CMat out = CMat::Zero(info.msize, info.msize);
  for (int i = 0; i < xi.size(); ++i) out += xi(i) * info.basis[i];
  return out;
}

Vec algebra_coords(GroupId id, const CMat& X) {
  const GroupInfo& info = group_info(id);
  return info.coord_solver.solve(flatten_cmat(X));
}

GroupElement group_exp(GroupId id, const Vec& xi) {
  const double r2 = std::sqrt(2.0);
  switch (id) {
    case GroupId::SO3:
      return {id, real_to_cmat(rodrigues(Eigen::Vector3d(xi) / r2))};
    case GroupId::SU2: {
      // M = sum xi_i X_i satisfies M^2 = -|xi|^2 I.
      const double th = xi.norm();
      const CMat M = algebra_element_matrix(id, xi);
      if (th < 1e-12) return {id, CMat(CMat::Identity(2, 2) + M)};
      return {id, CMat(std::cos(th) * CMat::Identity(2, 2) +
                       (std::sin(th) / th) * M)};
    }
    case GroupId::SL2R: {
      // Traceless 2x2: M^2 = -det(M) I, giving circular/hyperbolic branches.
      const Mat M = algebra_element_matrix(id, xi).real();
      const double q = M.determinant();
      const Mat I = Mat::Identity(2, 2);
      Mat g;
      if (std::abs(q) < 1e-14) {
        g = I + M;
      } else if (q > 0) {
        const double th = std::sqrt(q);
        g = std::cos(th) * I + (std::sin(th) / th) * M;
      } else {
        const double ph = std::sqrt(-q);
        g = std::cosh(ph) * I + (std::sinh(ph) / ph) * M;
      }
      return {id, real_to_cmat(g)};
    }
    case GroupId::SO21:
      // basis_i = -hat_H(e_i)/sqrt2.
      return {id, real_to_cmat(
                      rodrigues_minkowski(-Eigen::Vector3d(xi) / r2))};
    case GroupId::SO31:
      return {id, real_to_cmat(expm(
                      Mat(algebra_element_matrix(id, xi).real())))};
    case GroupId::H3: {
      Mat g = Mat::Identity(3, 3);
      g(0, 1) = xi(0);
      g(1, 2) = xi(1);
      g(0, 2) = xi(2) + 0.5 * xi(0) * xi(1);
      return {id, real_to_cmat(g)};
    }
    case GroupId::SE3:
    case GroupId::SE21: {
      const Eigen::Vector3d w = xi.head(3), v = xi.tail(3);
      const bool mink = (id == GroupId::SE21);
      const Mat H = mink ? hat_H(w) : hat_F(w);
      const double K = mink ? minkowski_dot(w, w) : w.squaredNorm();
      const Mat R = mink ? rodrigues_minkowski(w) : rodrigues(w);
      return {id, embed_block(R, motion_V(H, K) * v)};
    }
  }
  throw UsageError("bad group id");
}

Vec group_log(const GroupElement& g) {
  const double r2 = std::sqrt(2.0);
  const Mat m = g.m.real();
  switch (g.id) {
    case GroupId::SO3:
      return r2 * so3_log_vee(m);
    case GroupId::SU2: {
      const Quat q = psi_inv(g.m);
      const double vn = q.vec().norm();
      const double alpha = std::atan2(vn, q.w);
      if (alpha > M_PI - 1e-3)
        throw ChartOverflowError("su2 logarithm near the antipode");
      if (vn < 1e-12) return Vec::Zero(3);
      return (alpha / vn) * Vec(q.vec());
    }
    case GroupId::SL2R: {
      if (m.trace() <= -2.0 + 1e-9)
        throw ChartOverflowError("sl2 logarithm branch cut");
      return algebra_coords(g.id, real_to_cmat(verified_logm(m)));
    }
    case GroupId::SO21:
    case GroupId::SO31:
      return algebra_coords(g.id, real_to_cmat(verified_logm(m)));
    case GroupId::H3: {
      Vec xi(3);
      xi << m(0, 1), m(1, 2), m(0, 2) - 0.5 * m(0, 1) * m(1, 2);
      return xi;
    }
    case GroupId::SE3: {
      const Eigen::Vector3d w = so3_log_vee(m.topLeftCorner(3, 3));
      const Mat V = motion_V(hat_F(w), w.squaredNorm());
      Vec xi(6);
      xi.head(3) = w;
      xi.tail(3) = V.partialPivLu().solve(m.topRightCorner(3, 1));
      return xi;
    }
    case GroupId::SE21: {
      const Mat L = verified_logm(m);
      Vec xi(6);
      xi.head(3) = vee_H(L.topLeftCorner(3, 3));
      xi.tail(3) = L.topRightCorner(3, 1);
      return xi;
    }
  }
  throw UsageError("bad group id");
}

Mat adjoint_rep(const GroupElement& g) {
  const GroupInfo& info = group_info(g.id);
  const int n = static_cast<int>(info.basis.size());
  const GroupElement gi = ginv(g);
  Mat out(n, n);
  for (int i = 0; i < n; ++i)
    out.col(i) = algebra_coords(g.id, CMat(g.m * info.basis[i] * gi.m));
  return out;
}

Mat coadjoint_rep(const GroupElement& g) {
  return adjoint_rep(ginv(g)).transpose();
}

GroupElement random_group_element(GroupId id, Rng& rng, double scale) {
  const int n = group_algebra(id).dim;
  Vec xi(n);
  for (int i = 0; i < n; ++i) xi(i) = rng.uniform(-scale, scale);
  return group_exp(id, xi);
}

// --------------------------------------------------------------- semidirect

SemidirectElement semidirect_identity(GroupId id, SemiVariant variant) {
  return {group_identity(id), Vec::Zero(group_algebra(id).dim), variant};
}

SemidirectElement semidirect_mul(const SemidirectElement& a,
                                 const SemidirectElement& b) {
  if (a.variant != b.variant)
    throw UsageError("semidirect product across different variants");
  const Mat act = a.variant == SemiVariant::Adjoint
                      ? adjoint_rep(a.sigma)
                      : coadjoint_rep(a.sigma);
  return {gmul(a.sigma, b.sigma), a.payload + act * b.payload, a.variant};
}

SemidirectElement semidirect_inv(const SemidirectElement& a) {
  const GroupElement si = ginv(a.sigma);
  const Mat act = a.variant == SemiVariant::Adjoint ? adjoint_rep(si)
                                                    : coadjoint_rep(si);
  return {si, -(act * a.payload), a.variant};
}

SemidirectElement semidirect_exp(GroupId id, SemiVariant variant,
                                 const Vec& xi, const Vec& w, double t) {
  const LieAlgebra& L = group_algebra(id);
  const int n = L.dim;
  const Mat M = variant == SemiVariant::Adjoint
                    ? ad_matrix(L, xi)
                    : Mat(-ad_matrix(L, xi).transpose());
  Mat block = Mat::Zero(n + 1, n + 1);
  block.topLeftCorner(n, n) = t * M;
  block.topRightCorner(n, 1) = t * w;
  const Mat E = expm(block);
  return {group_exp(id, t * xi), E.topRightCorner(n, 1), variant};
}

Vec semidirect_log(const SemidirectElement& a) {
  const Vec base = group_log(a.sigma);
  Vec out(base.size() + a.payload.size());
  out.head(base.size()) = base;
  out.tail(a.payload.size()) = a.payload;
  return out;
}

Vec semidirect_fd_bracket(GroupId id, SemiVariant variant, const Vec& x1,
                          const Vec& w1, const Vec& x2, const Vec& w2,
                          double h) {
  auto commutator_chart = [&](double s) {
    const SemidirectElement e1 = semidirect_exp(id, variant, x1, w1, s);
    const SemidirectElement e2 = semidirect_exp(id, variant, x2, w2, s);
    const SemidirectElement c = semidirect_mul(
        semidirect_mul(e1, e2), semidirect_mul(semidirect_inv(e1),
                                               semidirect_inv(e2)));
    return semidirect_log(c);
  };
  return (commutator_chart(h) + commutator_chart(-h)) / (2.0 * h * h);
}

double semidirect_membership_residual(const SemidirectElement& a) {
  return membership_residual(a.sigma);
}

}  // namespace cskit
