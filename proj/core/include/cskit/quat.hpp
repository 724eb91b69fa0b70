/**
 * @file quat.hpp
 * @brief Quaternions, split quaternions, and their dual extensions.
 *
 * Conventions:
 *  - Quat is the Hamilton algebra: i^2 = j^2 = k^2 = -1, i j = k.
 *  - SplitQuat has i^2 = -1, j^2 = k^2 = +1 and i j k = 1.  Its product is
 *      Q P = q0 p0 - <q, p> + q0 p + p0 q + q x p,
 *    where <q,p> = qx px - qy py - qz pz is the signature-(1,2) pairing on
 *    vector parts and x is the Minkowski cross product (minkowski_cross).
 *    The norm <Q,Q> = w^2 + x^2 - y^2 - z^2 has signature (2,2) and is
 *    multiplicative; unit split quaternions have <Q,Q> = +1.
 *  - Dual<B> adjoins a dual unit e with e^2 = 0: elements B_r + e B_d.
 *    The dual-valued norm of Q_r + e Q_d is (|Q_r|^2, 2 <Q_r, Q_d>) and is
 *    multiplicative in dual-number arithmetic.
 */
#pragma once

#include <string>

#include "cskit/linalg.hpp"

namespace cskit {

using Vec3 = Eigen::Vector3d;

// ---------------------------------------------------------------- Hamilton
struct Quat {
  double w = 0, x = 0, y = 0, z = 0;
  Vec3 vec() const { return {x, y, z}; }
  static Quat pure(const Vec3& v) { return {0, v.x(), v.y(), v.z()}; }
};

Quat qmul(const Quat& a, const Quat& b);
Quat qadd(const Quat& a, const Quat& b);
Quat qsub(const Quat& a, const Quat& b);
Quat qscale(double s, const Quat& a);
Quat qconj(const Quat& a);
double qdot(const Quat& a, const Quat& b);  ///< Euclidean 4D dot
double qnorm2(const Quat& a);               ///< = qdot(a, a)
double qnorm(const Quat& a);                ///< Euclidean 4D length
Quat qinv(const Quat& a);                   ///< throws DegenerateError at 0

// ------------------------------------------------------------------- split
struct SplitQuat {
  double w = 0, x = 0, y = 0, z = 0;
  Vec3 vec() const { return {x, y, z}; }
  static SplitQuat pure(const Vec3& v) { return {0, v.x(), v.y(), v.z()}; }
};

/// Signature-(1,2) pairing of vector parts: ax bx - ay by - az bz.
double minkowski_dot(const Vec3& a, const Vec3& b);

/// Minkowski cross product (vector part of the split product of pure
/// elements); satisfies [H(a), H(b)] = H(a x b) for the hat map of
/// isomaps.hpp and <a, a x b> = 0.
Vec3 minkowski_cross(const Vec3& a, const Vec3& b);

SplitQuat smul(const SplitQuat& a, const SplitQuat& b);
SplitQuat sadd(const SplitQuat& a, const SplitQuat& b);
SplitQuat sscale(double s, const SplitQuat& a);
SplitQuat sconj(const SplitQuat& a);
double sdot(const SplitQuat& a, const SplitQuat& b);  ///< signature (2,2)
double snorm2(const SplitQuat& a);                    ///< = sdot(a, a)
SplitQuat sinv(const SplitQuat& a);  ///< throws DegenerateError on null norm

/// Causal class of a vector with respect to a quadratic value q = <v,v>;
/// |q| below 1e-12 * max(1, scale2) counts as lightlike, where scale2 is the
/// Euclidean magnitude squared of the vector.
enum class CausalType { Timelike, Lightlike, Spacelike };
CausalType causal_type(double q, double scale2);

/// Exponential of a split quaternion q0 + v.  The pure part selects the
/// branch by its causal type: circular for <v,v> > 0, hyperbolic for
/// <v,v> < 0, and 1 + v on the null cone; the scalar part contributes
/// exp(q0) as an overall factor.
SplitQuat split_exp(const SplitQuat& a);

// -------------------------------------------------------------------- dual
template <typename B>
struct Dual {
  B r;  ///< real part
  B d;  ///< dual part (coefficient of e)
};

using DualQuat = Dual<Quat>;
using DualSplitQuat = Dual<SplitQuat>;

DualQuat dmul(const DualQuat& a, const DualQuat& b);
DualSplitQuat dmul(const DualSplitQuat& a, const DualSplitQuat& b);

/// Inverse: (Qr + e Qd)^{-1} = Qr^{-1} - e Qr^{-1} Qd Qr^{-1}.
DualQuat dinv(const DualQuat& a);
DualSplitQuat dinv(const DualSplitQuat& a);

/// Dual-valued norm (real part, dual part) = (|Qr|^2, 2 <Qr, Qd>).
struct DualNumber {
  double r = 0, d = 0;
};
DualNumber dual_norm2(const DualQuat& a);
DualNumber dual_norm2(const DualSplitQuat& a);
DualNumber dual_mul(const DualNumber& a, const DualNumber& b);

/// Unit dual element encoding the pose (rotation r, translation p):
/// real part r, dual part pure(p) * r.
DualQuat unit_dq_from_pose(const Quat& r, const Vec3& p);
DualSplitQuat unit_dsq_from_pose(const SplitQuat& r, const Vec3& p);

/// Residual of the unit conditions |Qr|^2 = 1, <Qr, Qd> = 0.
double unit_residual(const DualQuat& a);
double unit_residual(const DualSplitQuat& a);

// -------------------------------------------------------------------- text
/// "w + x i + y j + z k" with 12 significant digits.
std::string to_string(const Quat& a);
std::string to_string(const SplitQuat& a);
/// "Qr + e(Qd)".
std::string to_string(const DualQuat& a);
std::string to_string(const DualSplitQuat& a);

}  // namespace cskit
