/**
 * @file isomaps.hpp
 * @brief The web of covers and isomorphisms connecting the quaternionic
 *        models to the matrix groups.
 *
 * Linear-algebraic maps:
 *   hat_F : R^3 -> so(3) matrices, hat_F(a) b = a x b (Euclidean cross).
 *   hat_H : R^3 -> so(2,1) matrices, hat_H(a) b = a x b (Minkowski cross);
 *           both satisfy hat([a x b]) = [hat a, hat b].
 *   psi   : quaternions -> M(2, C), algebra isomorphism onto the real span of
 *           {I, X1, X2, X3}; det(psi(Q)) = |Q|^2.
 *   omega : split quaternions -> M(2, R), algebra isomorphism with
 *           det(omega(Q)) = <Q, Q>.
 *   f_iso : a fixed isomorphism from a 3-dimensional matrix algebra spanned
 *           by E1, E2, E3 (see f_iso_domain_basis) onto sl(2, R).
 *
 * Group covers:
 *   rot3  : unit quaternions -> SO(3), the standard 2:1 cover.
 *   rot21 : unit split quaternions -> SO(2,1), conjugation on vector parts.
 *   pi_cover   : unit dual quaternions -> SE(3), translation read off as
 *                vec(Q_d Q_r^{-1}).
 *   pi21_cover : unit dual split quaternions -> SE(2,1), same recipe.
 *   phibar : unit dual quaternions -> T*SU(2) (cotangent group).
 *   p_iso  : unit dual split quaternions -> TSL(2,R) (tangent group).
 *
 * Index-lowering and bundle identifications:
 *   theta_flat / theta_sharp : g <-> g* via the Killing form.
 *   T_iso  : T*SO(3)  -> SE(3)   (Theorem-level identification).
 *   Tprime_iso : T*SO(2,1) -> SE(2,1).
 *   Phi_iso : TG -> T*G over a group with nondegenerate Killing form.
 *
 * Every group-level map is wrapped in a MapDescriptor, a flattened-vector
 * closure bundle against which hom_residual measures the homomorphism defect
 * on seeded random pairs.
 */
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cskit/groups.hpp"
#include "cskit/quat.hpp"

namespace cskit {

// ------------------------------------------------------------- linear maps
Mat hat_F(const Vec3& a);   ///< Euclidean cross-product matrix
Vec3 vee_F(const Mat& m);   ///< inverse of hat_F
Mat hat_H(const Vec3& a);   ///< Minkowski cross-product matrix
Vec3 vee_H(const Mat& m);   ///< inverse of hat_H

CMat psi(const Quat& q);    ///< 2x2 complex image
Quat psi_inv(const CMat& m);
Mat omega_map(const SplitQuat& q);  ///< 2x2 real image
SplitQuat omega_inv(const Mat& m);

/// Basis E1, E2, E3 of the domain of f_iso (3x3 matrices with
/// [E1,E2] = E3, [E1,E3] = E2, [E2,E3] = -E1).
const std::vector<Mat>& f_iso_domain_basis();
/// Image matrices F1, F2, F3 in sl(2,R).
const std::vector<Mat>& f_iso_image_basis();
/// f_iso of the element with coordinates x in the E-basis.
Mat f_iso(const Vec& x);
/// max bracket defect |f([a,b]) - [f(a), f(b)]| over the basis.
double f_iso_bracket_residual();

// ------------------------------------------------------------------ covers
Mat rot3(const Quat& q);          ///< closed-form rotation matrix (q unit)
Mat rot21(const SplitQuat& q);    ///< conjugation on split vector parts
GroupElement pi_cover(const DualQuat& q);        ///< -> SE3
GroupElement pi21_cover(const DualSplitQuat& q); ///< -> SE21
SemidirectElement phibar(const DualQuat& q);     ///< -> T*SU(2)
SemidirectElement p_iso(const DualSplitQuat& q); ///< -> T SL(2,R)

// -------------------------------------------------- index-lowering bridges
/// f = K(x, .) in dual coordinates (Killing form of L).
Vec theta_flat(const LieAlgebra& L, const Vec& x);
/// Inverse; throws DegenerateError when the Killing form is singular.
Vec theta_sharp(const LieAlgebra& L, const Vec& f);
/// Equivariance defect of a candidate pairing B over group id:
/// max over trials of |B Ad(g) - Ad*(g) B| applied to random vectors.
double flat_equivariance_residual(GroupId id, const Mat& B, int trials,
                                  Rng rng);

GroupElement T_iso(const SemidirectElement& a);       ///< T*SO(3) -> SE(3)
GroupElement Tprime_iso(const SemidirectElement& a);  ///< T*SO(2,1)->SE(2,1)
SemidirectElement Phi_iso(const SemidirectElement& a); ///< TG -> T*G

// ------------------------------------------------------------- descriptors
/// A group homomorphism packaged as closures over flattened coordinates.
struct MapDescriptor {
  std::string name;
  std::string doc;
  std::function<Vec(Rng&)> sample;                      ///< random domain pt
  std::function<Vec(const Vec&, const Vec&)> domain_mul;
  std::function<Vec(const Vec&)> apply;
  std::function<Vec(const Vec&, const Vec&)> codomain_mul;
  std::function<double(const Vec&)> codomain_membership;
};

/// All registered maps: psi, rot3, pi, omega, rot21, pi21, p, phibar,
/// T, Tprime, Phi.
const std::vector<MapDescriptor>& iso_registry();
const MapDescriptor& find_map(const std::string& name);

/// max over seeded trials of max(|f(ab) - f(a)f(b)|_inf, membership(f(a))).
/// Each trial draws from an independent child generator, so the residual for
/// trial k does not depend on the total number of trials.
double hom_residual(const MapDescriptor& map, int trials, Rng rng);

// ------------------------------------------------------- flatten utilities
Vec flatten_group(const GroupElement& g);
GroupElement unflatten_group(GroupId id, const Vec& v);
Vec flatten_semidirect(const SemidirectElement& s);
SemidirectElement unflatten_semidirect(GroupId id, SemiVariant variant,
                                       const Vec& v);

// ----------------------------------------------------------- random inputs
double sample_normal(Rng& rng);               ///< Box-Muller
Quat sample_unit_quat(Rng& rng);              ///< uniform on S^3
SplitQuat sample_unit_split_quat(Rng& rng);   ///< <Q,Q> = +1 component
DualQuat sample_unit_dual_quat(Rng& rng);
DualSplitQuat sample_unit_dual_split_quat(Rng& rng);

}  // namespace cskit
