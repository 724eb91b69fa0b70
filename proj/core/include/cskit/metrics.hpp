/**
 * @file metrics.hpp
 * @brief Invariant metrics: the parallelism identity, the two-parameter
 *        family on so(3,1), and cotangent-group metrics.
 *
 * A left-invariant metric field mu on a group satisfies the parallelism
 * identity when, for left-invariant fields x+, y+, z+,
 *
 *     x+ . mu(y+, z+) = 1/2 ( mu([x,y]+, z+) + mu(y+, [x,z]+) ).
 *
 * In frame components g_jk(p) = mu_p(e_j+, e_k+) this reads
 *
 *     (d/dt) g_jk(p + t e_i+) |_{t=0}
 *         = 1/2 sum_t ( c_ijt g_tk + c_ikt g_jt ),
 *
 * which parallelism_residual checks by central finite differences.
 *
 * On the Heisenberg group the general solution is a six-parameter family of
 * genuinely position-dependent metric fields (h3_metric_field); every one of
 * them restricts at the identity to a form that is NOT ad-invariant, and in
 * fact every ad-invariant symmetric form on h3 is degenerate.
 *
 * On so(3,1) the invariant forms are spanned by the Killing form K0 and the
 * secondary pairing K_J = J^T K0 = 4 D, giving so31_metric(k1, k2) with
 * det = -(k1^2 + k2^2)^3: nondegenerate away from the origin.
 *
 * Cotangent groups T*G carry the block metrics
 *     odd:  [[ s K0, t I ], [ t I, 0 ]]
 *     even (so31): [[ s1 K0 + s2 K_J, t1 I + t2 J^T ],
 *                   [ t1 I + t2 J,    0              ]]
 * degenerate exactly when the pairing part (t, resp. (t1, t2)) vanishes.
 */
#pragma once

#include <functional>
#include <vector>

#include "cskit/lie_algebra.hpp"
#include "cskit/linalg.hpp"

namespace cskit {

/// Coefficients of the Heisenberg metric family.
struct H3MetricParams {
  double a = 1.0, b = 0.0, c = 0.0, d = 0.0, e = 1.0, m = 1.0;
};

/// A metric field in a fixed coordinate chart, together with the
/// left-invariant frame expressed in the same coordinates.
struct CoordinateMetricField {
  int dim = 0;
  std::function<Mat(const Vec&)> at;     ///< coordinate metric matrix at x
  std::function<Mat(const Vec&)> frame;  ///< columns = frame fields at x
};

/// The six-parameter family of parallelism metrics on the Heisenberg group,
/// in exponential-adapted coordinates (x, y, z) with frame
/// e1+ = d/dx, e2+ = d/dy + x d/dz, e3+ = d/dz.
CoordinateMetricField h3_metric_field(const H3MetricParams& p);

/// det of the field (independent of the point):
/// a e m - a d^2 - b^2 m + 2 b c d - c^2 e.
double h3_metric_det(const H3MetricParams& p);

/// Max parallelism defect over the given points, all frame triples (i,j,k),
/// with central differences of step h.
double parallelism_residual(const CoordinateMetricField& field,
                            const LieAlgebra& L,
                            const std::vector<Vec>& points, double h = 1e-5);

/// Secondary invariant pairing block on so(3,1): symmetric D with
/// D(0,3) = D(1,4) = 1, D(2,5) = -1 (and mirrors), zero elsewhere.
Mat so31_D_matrix();
/// The invariant complex structure J = eta D, eta = diag(1,1,1,-1,-1,-1).
Mat so31_J_matrix();
/// K_J = J^T K0 = 4 D.
Mat so31_kj_matrix();

/// k1 K0/4-normalized family: k1 diag(1,1,1,-1,-1,-1) + k2 D.
/// Throws DegenerateError when k1 = k2 = 0.
Mat so31_metric(double k1, double k2);
/// Closed-form determinant -(k1^2 + k2^2)^3.
double so31_metric_det(double k1, double k2);

/// Odd cotangent metric [[s K0, t I], [t I, 0]] on T*g, dimension 2n.
/// Throws DegenerateError when |t| < 1e-12.
Mat cotangent_metric_odd(const LieAlgebra& L, double s, double t);

/// Even cotangent metric on T*so(3,1), dimension 12.
/// Throws DegenerateError when t1^2 + t2^2 < 1e-24.
Mat cotangent_metric_even_so31(double s1, double s2, double t1, double t2);

/// Closed-form eigenvalue multiset of the odd metric when K0 = c diag(eps):
/// lambda_{1,2} = (c s -+ sqrt((c s)^2 + 4 t^2)) / 2, contributed as
/// {l1, l2} for eps_i = +1 and {-l1, -l2} for eps_i = -1. Sorted ascending.
std::vector<double> odd_metric_expected_eigenvalues(const LieAlgebra& L,
                                                    double s, double t);

/// Max distance between the computed and closed-form eigenvalue multisets.
double odd_metric_eigen_residual(const LieAlgebra& L, double s, double t);

}  // namespace cskit
