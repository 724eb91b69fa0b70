/**
 * @file screws.cpp
 * @brief Screw motions, Chasles decomposition, and geodesic verification.
 */
#include "cskit/screws.hpp"

#include <algorithm>
#include <cmath>

#include "cskit/errors.hpp"
#include "cskit/isomaps.hpp"

namespace cskit {

GroupId motion_group(MotionSpace sp) {
  return sp == MotionSpace::Euclidean ? GroupId::SE3 : GroupId::SE21;
}

Vec twist_coords(const Twist& xi) {
  Vec v(6);
  v << xi.omega, xi.v;
  return v;
}

GroupElement twist_exp(MotionSpace sp, const Twist& xi, double t) {
  return group_exp(motion_group(sp), Vec(t * twist_coords(xi)));
}

GroupElement geodesic_sample(MotionSpace sp, const Twist& xi,
                             const GroupElement& g0, double t) {
  return gmul(twist_exp(sp, xi, t), g0);
}

ScrewDecomposition screw_decompose(const GroupElement& g) {
  if (g.id != GroupId::SE3)
    throw UsageError("screw decomposition is defined on SE(3)");
  const Mat T = g.m.real();
  const Mat R = T.topLeftCorner(3, 3);
  const Vec3 p = T.topRightCorner(3, 1);

  ScrewDecomposition out;
  const double ctheta = std::clamp(0.5 * (R.trace() - 1.0), -1.0, 1.0);
  const double theta = std::acos(ctheta);

  if (theta < 1e-10) {
    out.pure_translation = true;
    out.angle = 0.0;
    out.point = Vec3::Zero();
    const double n = p.norm();
    out.pitch = n;
    out.axis = n > 1e-12 ? Vec3(p / n) : Vec3::UnitZ();
    return out;
  }

  Vec3 u;
  if (M_PI - theta < 1e-6) {
    // Half-turn: R = 2 u u^T - I, recover u from the largest diagonal of
    // (R + I)/2 and orient it by its first nonvanishing component.
    const Mat B = 0.5 * (R + Mat::Identity(3, 3));
    int imax = 0;
    for (int i = 1; i < 3; ++i)
      if (B(i, i) > B(imax, imax)) imax = i;
    u = Vec3(B.col(imax)) / std::sqrt(B(imax, imax));
    for (int i = 0; i < 3; ++i) {
      if (std::abs(u(i)) > 1e-8) {
        if (u(i) < 0) u = -u;
        break;
      }
    }
  } else {
    u = vee_F(Mat(R - R.transpose())) / (2.0 * std::sin(theta));
  }

  // p = V(theta) (v theta) for the twist (u theta, v theta); invert V.
  const Mat W = hat_F(Vec3(u * theta));
  const Mat V = Mat::Identity(3, 3) +
                (1.0 - std::cos(theta)) / (theta * theta) * W +
                (theta - std::sin(theta)) / (theta * theta * theta) * W * W;
  const Vec3 vv = Vec3(V.partialPivLu().solve(p)) / theta;

  out.angle = theta;
  out.axis = u;
  out.pitch = u.dot(vv);
  out.point = u.cross(vv);
  out.pure_translation = false;
  return out;
}

GroupElement screw_reconstruct(const ScrewDecomposition& s) {
  if (s.pure_translation) {
    Twist xi{Vec3::Zero(), Vec3(s.axis * s.pitch)};
    return twist_exp(MotionSpace::Euclidean, xi);
  }
  // point = u x v, pitch = u . v  =>  v = point x u + pitch u
  const Vec3 v = s.point.cross(s.axis) + s.pitch * s.axis;
  Twist xi{Vec3(s.axis * s.angle), Vec3(v * s.angle)};
  return twist_exp(MotionSpace::Euclidean, xi);
}

Mat se3_bundle_metric(double s, double t) {
  Mat B = Mat::Zero(6, 6);
  B.topLeftCorner(3, 3) = -2.0 * s * Mat::Identity(3, 3);
  B.topRightCorner(3, 3) = -2.0 * t * Mat::Identity(3, 3);
  B.bottomLeftCorner(3, 3) = -2.0 * t * Mat::Identity(3, 3);
  return B;
}

Mat se21_bundle_metric(double s, double t) {
  Vec etap(3);
  etap << -1, 1, 1;
  const Mat E = Mat(etap.asDiagonal());
  Mat B = Mat::Zero(6, 6);
  B.topLeftCorner(3, 3) = 2.0 * s * E;
  B.topRightCorner(3, 3) = 2.0 * t * E;
  B.bottomLeftCorner(3, 3) = 2.0 * t * E;
  return B;
}

namespace {

/// Left-invariant frame in the exponential chart at x, by central FD.
Mat chart_frame(GroupId id, const Vec& x, double h) {
  const int n = static_cast<int>(x.size());
  const GroupElement g = group_exp(id, x);
  Mat C(n, n);
  for (int i = 0; i < n; ++i) {
    Vec e = Vec::Zero(n);
    e(i) = h;
    const Vec fp = group_log({id, CMat(g.m * group_exp(id, e).m)});
    const Vec fm = group_log({id, CMat(g.m * group_exp(id, Vec(-e)).m)});
    C.col(i) = (fp - fm) / (2.0 * h);
  }
  return C;
}

/// Metric coefficients in the chart: C^{-T} B C^{-1}.
Mat chart_metric(GroupId id, const Mat& B, const Vec& x, double h) {
  const Mat C = chart_frame(id, x, h);
  const Mat Ci = C.inverse();
  return Mat(Ci.transpose() * B * Ci);
}

/// Christoffel symbols Gamma^k_ij of the chart metric at x.
std::vector<Mat> christoffel(GroupId id, const Mat& B, const Vec& x,
                             double h) {
  const int n = static_cast<int>(x.size());
  const Mat M0 = chart_metric(id, B, x, h);
  std::vector<Mat> dM(n);
  for (int i = 0; i < n; ++i) {
    Vec e = Vec::Zero(n);
    e(i) = h;
    dM[i] = Mat((chart_metric(id, B, Vec(x + e), h) -
                 chart_metric(id, B, Vec(x - e), h)) /
                (2.0 * h));
  }
  const Mat Minv = M0.inverse();
  std::vector<Mat> G(n, Mat::Zero(n, n));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int l = 0; l < n; ++l)
          acc += Minv(k, l) * (dM[i](j, l) + dM[j](i, l) - dM[l](i, j));
        G[k](i, j) = 0.5 * acc;
      }
  return G;
}

}  // namespace

double geodesic_residual(MotionSpace sp, const Mat& B, const Twist& xi,
                         const GroupElement& g0,
                         const std::vector<double>& ts) {
  const GroupId id = motion_group(sp);
  const auto gamma = [&](double t) {
    return group_log(geodesic_sample(sp, xi, g0, t));
  };
  const double dt = 1e-3;
  const double h = 1e-4;
  double res = 0.0;
  for (double t : ts) {
    const Vec c0 = gamma(t);
    const Vec cp = gamma(t + dt);
    const Vec cm = gamma(t - dt);
    const Vec vel = (cp - cm) / (2.0 * dt);
    const Vec acc = (cp - 2.0 * c0 + cm) / (dt * dt);
    const auto G = christoffel(id, B, c0, h);
    for (std::size_t k = 0; k < G.size(); ++k) {
      const double r = acc(static_cast<int>(k)) +
                       vel.dot(G[k] * vel);
      res = std::max(res, std::abs(r));
    }
  }
  return res;
}

ObstructionScan riemannian_obstruction_scan(MotionSpace sp, int grid,
                                            double lo, double hi) {
  ObstructionScan scan;
  scan.space = sp;
  scan.s_values.resize(grid);
  scan.t_values.resize(grid);
  for (int i = 0; i < grid; ++i) {
    const double v = lo + (hi - lo) * i / (grid - 1);
    scan.s_values[i] = v;
    scan.t_values[i] = v;
  }
  scan.signatures.assign(grid, std::vector<Signature>(grid));
  scan.min_negative = 999;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      const Mat B = sp == MotionSpace::Euclidean
                        ? se3_bundle_metric(scan.s_values[i], scan.t_values[j])
                        : se21_bundle_metric(scan.s_values[i],
                                             scan.t_values[j]);
      const Signature sig = signature_of(B);
      scan.signatures[i][j] = sig;
      scan.min_negative = std::min(scan.min_negative, sig.neg);
    }
  return scan;
}

}  // namespace cskit
