/**
 * @file quat.cpp
 * @brief Quaternion family implementations.
 */
#include "cskit/quat.hpp"

#include <cmath>

#include "cskit/errors.hpp"
#include "cskit/json_io.hpp"

namespace cskit {

// ---------------------------------------------------------------- Hamilton

Quat qmul(const Quat& a, const Quat& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y + a.y * b.w + a.z * b.x - a.x * b.z,
          a.w * b.z + a.z * b.w + a.x * b.y - a.y * b.x};
}

Quat qadd(const Quat& a, const Quat& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

Quat qsub(const Quat& a, const Quat& b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

Quat qscale(double s, const Quat& a) {
  return {s * a.w, s * a.x, s * a.y, s * a.z};
}

Quat qconj(const Quat& a) { return {a.w, -a.x, -a.y, -a.z}; }

double qdot(const Quat& a, const Quat& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

double qnorm2(const Quat& a) { return qdot(a, a); }

double qnorm(const Quat& a) { return std::sqrt(qnorm2(a)); }

Quat qinv(const Quat& a) {
  const double n2 = qnorm2(a);
  if (n2 == 0.0) throw DegenerateError("inverse of zero quaternion");
  return qscale(1.0 / n2, qconj(a));
}

// ------------------------------------------------------------------- split

double minkowski_dot(const Vec3& a, const Vec3& b) {
  return a.x() * b.x() - a.y() * b.y() - a.z() * b.z();
}

Vec3 minkowski_cross(const Vec3& a, const Vec3& b) {
  return {a.z() * b.y() - a.y() * b.z(),
          a.z() * b.x() - a.x() * b.z(),
          a.x() * b.y() - a.y() * b.x()};
}

SplitQuat smul(const SplitQuat& a, const SplitQuat& b) {
  const Vec3 q = a.vec(), p = b.vec();
  const Vec3 v = a.w * p + b.w * q + minkowski_cross(q, p);
  return {a.w * b.w - minkowski_dot(q, p), v.x(), v.y(), v.z()};
}

SplitQuat sadd(const SplitQuat& a, const SplitQuat& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

SplitQuat sscale(double s, const SplitQuat& a) {
  return {s * a.w, s * a.x, s * a.y, s * a.z};
}

SplitQuat sconj(const SplitQuat& a) { return {a.w, -a.x, -a.y, -a.z}; }

double sdot(const SplitQuat& a, const SplitQuat& b) {
  return a.w * b.w + a.x * b.x - a.y * b.y - a.z * b.z;
}

double snorm2(const SplitQuat& a) { return sdot(a, a); }

SplitQuat sinv(const SplitQuat& a) {
  const double n2 = snorm2(a);
  if (std::abs(n2) < 1e-300)
    throw DegenerateError("inverse of null split quaternion");
  return sscale(1.0 / n2, sconj(a));
}

CausalType causal_type(double q, double scale2) {
  const double tol = 1e-12 * std::max(1.0, scale2);
  if (std::abs(q) < tol) return CausalType::Lightlike;
  return q > 0 ? CausalType::Timelike : CausalType::Spacelike;
}

SplitQuat split_exp(const SplitQuat& a) {
  const Vec3 v = a.vec();
  const double q = minkowski_dot(v, v);
  const double scale = std::exp(a.w);
  SplitQuat out;
  switch (causal_type(q, v.squaredNorm())) {
    case CausalType::Lightlike:
      out = {1.0, v.x(), v.y(), v.z()};
      break;
    case CausalType::Timelike: {
      const double th = std::sqrt(q);
      const double s = std::sin(th) / th;
      out = {std::cos(th), s * v.x(), s * v.y(), s * v.z()};
      break;
    }
    case CausalType::Spacelike: {
      const double ph = std::sqrt(-q);
      const double s = std::sinh(ph) / ph;
      out = {std::cosh(ph), s * v.x(), s * v.y(), s * v.z()};
      break;
    }
  }
  return sscale(scale, out);
}

// -------------------------------------------------------------------- dual

DualQuat dmul(const DualQuat& a, const DualQuat& b) {
  return {qmul(a.r, b.r), qadd(qmul(a.r, b.d), qmul(a.d, b.r))};
}

DualSplitQuat dmul(const DualSplitQuat& a, const DualSplitQuat& b) {
  return {smul(a.r, b.r), sadd(smul(a.r, b.d), smul(a.d, b.r))};
}

DualQuat dinv(const DualQuat& a) {
  const Quat ri = qinv(a.r);
  return {ri, qscale(-1.0, qmul(ri, qmul(a.d, ri)))};
}

DualSplitQuat dinv(const DualSplitQuat& a) {
  const SplitQuat ri = sinv(a.r);
  return {ri, sscale(-1.0, smul(ri, smul(a.d, ri)))};
}

DualNumber dual_norm2(const DualQuat& a) {
  return {qnorm2(a.r), 2.0 * qdot(a.r, a.d)};
}

DualNumber dual_norm2(const DualSplitQuat& a) {
  return {snorm2(a.r), 2.0 * sdot(a.r, a.d)};
}

DualNumber dual_mul(const DualNumber& a, const DualNumber& b) {
  return {a.r * b.r, a.r * b.d + a.d * b.r};
}

DualQuat unit_dq_from_pose(const Quat& r, const Vec3& p) {
  return {r, qmul(Quat::pure(p), r)};
}

DualSplitQuat unit_dsq_from_pose(const SplitQuat& r, const Vec3& p) {
  return {r, smul(SplitQuat::pure(p), r)};
}

double unit_residual(const DualQuat& a) {
  return std::max(std::abs(qnorm2(a.r) - 1.0), std::abs(qdot(a.r, a.d)));
}

double unit_residual(const DualSplitQuat& a) {
  return std::max(std::abs(snorm2(a.r) - 1.0), std::abs(sdot(a.r, a.d)));
}

// -------------------------------------------------------------------- text

namespace {
std::string components_to_string(double w, double x, double y, double z) {
  return jio::num12(w) + " + " + jio::num12(x) + " i + " + jio::num12(y) +
         " j + " + jio::num12(z) + " k";
}
}  // namespace

std::string to_string(const Quat& a) {
  return components_to_string(a.w, a.x, a.y, a.z);
}

std::string to_string(const SplitQuat& a) {
  return components_to_string(a.w, a.x, a.y, a.z);
}

std::string to_string(const DualQuat& a) {
  return to_string(a.r) + " + e(" + to_string(a.d) + ")";
}

std::string to_string(const DualSplitQuat& a) {
  return to_string(a.r) + " + e(" + to_string(a.d) + ")";
}

}  // namespace cskit
