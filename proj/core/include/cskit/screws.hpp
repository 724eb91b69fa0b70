/**
 * @file screws.hpp
 * @brief Screw motions, their decomposition, and geodesics of the
 *        pulled-back cotangent metrics on the motion groups.
 *
 * A twist xi = (omega, v) exponentiates to the one-parameter motion
 * exp(t xi) (a screw motion). On SE(3), Chasles' theorem decomposes any
 * displacement into (angle, axis, point, pitch): rotation by `angle` about
 * the line through `point` with direction `axis`, plus translation
 * `pitch * angle` along it; pure translations are flagged separately and
 * carry the length in `pitch`.
 *
 * The motion groups carry the degenerate-base cotangent metrics transported
 * from T*SO(3) / T*SO(2,1):
 *     se3_bundle_metric(s,t)  = [[-2 s I, -2 t I], [-2 t I, 0]]
 *     se21_bundle_metric(s,t) = [[ 2 s E,  2 t E], [ 2 t E, 0]],
 * E = diag(-1,1,1), written in the (rotation, translation) coordinates of
 * the twist. For these metrics the screws t -> exp(t xi) g0 are exactly the
 * geodesics; geodesic_residual measures the defect of the geodesic equation
 * in the exponential chart by finite differences, so it works for ANY
 * constant coefficient matrix B (used with perturbed B as a control).
 *
 * riemannian_obstruction_scan evaluates the signature of the family over a
 * parameter grid; the count of negative directions never drops below 3, so
 * no member is positive definite.
 */
#pragma once

#include <vector>

#include "cskit/groups.hpp"
#include "cskit/linalg.hpp"
#include "cskit/quat.hpp"

namespace cskit {

/// Infinitesimal motion: rotational part omega, translational part v.
struct Twist {
  Vec3 omega;
  Vec3 v;
};

enum class MotionSpace { Euclidean, Minkowski };

GroupId motion_group(MotionSpace sp);  ///< SE3 resp. SE21

/// Packs (omega, v) into algebra coordinates.
Vec twist_coords(const Twist& xi);

/// exp(t xi) in the motion group.
GroupElement twist_exp(MotionSpace sp, const Twist& xi, double t = 1.0);

/// Point of the curve t -> exp(t xi) g0.
GroupElement geodesic_sample(MotionSpace sp, const Twist& xi,
                             const GroupElement& g0, double t);

/// Chasles data of a Euclidean displacement.
struct ScrewDecomposition {
  double angle = 0.0;            ///< rotation angle in [0, pi]
  Vec3 axis = Vec3::UnitZ();     ///< unit direction of the screw axis
  Vec3 point = Vec3::Zero();     ///< point on the axis (axis-orthogonal rep)
  double pitch = 0.0;            ///< translation per unit angle; for pure
                                 ///< translations, the full length
  bool pure_translation = false;
};

/// Decompose g in SE(3). Throws UsageError for other groups.
ScrewDecomposition screw_decompose(const GroupElement& g);

/// Rebuild the displacement from its screw data.
GroupElement screw_reconstruct(const ScrewDecomposition& s);

Mat se3_bundle_metric(double s, double t);
Mat se21_bundle_metric(double s, double t);

/// Max defect of the geodesic equation gammaddot^k + Gamma^k_ij gammadot^i
/// gammadot^j = 0 for the curve exp(t xi) g0 under the left-invariant metric
/// with algebra matrix B, evaluated at the given parameter times. Charts,
/// frames, metric derivatives, and curve derivatives all come from central
/// finite differences (step 1e-4 in the chart, 1e-3 in t).
double geodesic_residual(MotionSpace sp, const Mat& B, const Twist& xi,
                         const GroupElement& g0,
                         const std::vector<double>& ts = {0.2, 0.5, 0.8});

/// Signature census of the bundle-metric family over an (s, t) grid.
struct ObstructionScan {
  MotionSpace space = MotionSpace::Euclidean;
  std::vector<double> s_values;
  std::vector<double> t_values;
  std::vector<std::vector<Signature>> signatures;  ///< [s index][t index]
  int min_negative = 0;  ///< least count of negative directions seen
};

ObstructionScan riemannian_obstruction_scan(MotionSpace sp, int grid = 10,
                                            double lo = -2.0, double hi = 2.0);

}  // namespace cskit
