/**
 * @file groups.hpp
 * @brief Matrix Lie groups paired with the built-in algebras.
 *
 * Supported groups and their matrix models:
 *   SO3   3x3 real,  R^T R = I, det R = 1
 *   SU2   2x2 complex, U* U = I, det U = 1
 *   SL2R  2x2 real,  det = 1
 *   SO21  3x3 real,  A^T eta A = eta with eta = diag(1,-1,-1), det = 1
 *   SO31  4x4 real,  A^T eta A = eta with eta = diag(1,1,1,-1), det = 1
 *   H3    3x3 upper unitriangular (Heisenberg)
 *   SE3   4x4 [[R, p],[0, 1]] with R in SO3
 *   SE21  4x4 [[A, p],[0, 1]] with A in SO21
 *
 * Elements store a complex matrix uniformly; real groups carry zero imaginary
 * part.  Products re-check membership and refuse to continue when the result
 * drifts off the manifold by more than 1e-8 — nothing is ever silently
 * re-orthonormalized.
 *
 * Each group is linked to a built-in algebra from lie_algebra.hpp and a fixed
 * matrix basis realizing it; group_exp / group_log and the (co)adjoint
 * representations use coordinates in that basis, so
 * adjoint_rep(group_exp(xi)) = expm(ad_matrix(xi)) holds exactly in exact
 * arithmetic.
 */
#pragma once

#include <string>
#include <vector>

#include "cskit/lie_algebra.hpp"
#include "cskit/linalg.hpp"
#include "cskit/rng.hpp"

namespace cskit {

enum class GroupId { SO3, SU2, SL2R, SO21, SO31, H3, SE3, SE21 };

GroupId group_from_name(const std::string& name);  ///< lowercase names
std::string group_name(GroupId id);
std::vector<std::string> group_names();

struct GroupElement {
  GroupId id = GroupId::SO3;
  CMat m;
};

/// Matrix dimension of the model (3, 2, 2, 3, 4, 3, 4, 4).
int group_matrix_size(GroupId id);

/// The built-in algebra attached to the group (so3, su2, ...).
const LieAlgebra& group_algebra(GroupId id);

/// Fixed matrix basis of the attached algebra.
const std::vector<CMat>& group_algebra_basis(GroupId id);

/// Identity element.
GroupElement group_identity(GroupId id);

/// Max-abs residual of the defining membership equations (including the
/// requirement that real groups have vanishing imaginary part).
double membership_residual(const GroupElement& g);

/// Product; throws GroupDriftError if the result's membership residual
/// exceeds 1e-8.
GroupElement gmul(const GroupElement& a, const GroupElement& b);

/// Structured inverse (transpose / eta-conjugation / block formulas), never a
/// generic numerical inversion for the orthogonal families.
GroupElement ginv(const GroupElement& g);

/// Algebra element as a matrix: sum_i xi_i B_i over the group's basis.
CMat algebra_element_matrix(GroupId id, const Vec& xi);

/// Coordinates of an algebra matrix in the group's basis (least squares;
/// exact for members of the span).
Vec algebra_coords(GroupId id, const CMat& X);

/// Group exponential of the algebra element with coordinates xi.
/// Closed forms for SO3 (Rodrigues), SO21 (circular/hyperbolic branches),
/// SU2, H3, SE3, SE21; scaling-and-squaring elsewhere.
GroupElement group_exp(GroupId id, const Vec& xi);

/// Inverse of group_exp near the identity component's principal branch;
/// throws ChartOverflowError at the cut locus (rotation angle near pi) or
/// when the principal logarithm fails to reproduce the element.
Vec group_log(const GroupElement& g);

/// Matrix of Ad(g) x = g x g^{-1} in the attached basis.
Mat adjoint_rep(const GroupElement& g);

/// Matrix of the coadjoint action on dual coordinates: Ad*(g) = Ad(g^{-1})^T.
Mat coadjoint_rep(const GroupElement& g);

/// exp of a random algebra element with coordinates uniform in
/// [-scale, scale].
GroupElement random_group_element(GroupId id, Rng& rng, double scale = 1.0);

// --------------------------------------------------------------- semidirect
/// Semidirect products G x| V where V is the attached algebra (payload acted
/// on by Ad, the tangent group TG) or its dual (payload acted on by Ad*, the
/// cotangent group T*G).
enum class SemiVariant { Adjoint, Coadjoint };

struct SemidirectElement {
  GroupElement sigma;
  Vec payload;
  SemiVariant variant = SemiVariant::Adjoint;
};

SemidirectElement semidirect_identity(GroupId id, SemiVariant variant);

/// (s1, p1)(s2, p2) = (s1 s2, p1 + act(s1) p2) with act = Ad or Ad*.
SemidirectElement semidirect_mul(const SemidirectElement& a,
                                 const SemidirectElement& b);

SemidirectElement semidirect_inv(const SemidirectElement& a);

/// One-parameter subgroup value exp(t (xi, w)).  The payload part is the
/// top-right block of expm(t [[M, w],[0, 0]]) with M = ad(xi) or -ad(xi)^T.
SemidirectElement semidirect_exp(GroupId id, SemiVariant variant,
                                 const Vec& xi, const Vec& w, double t = 1.0);

/// Chart around the identity: (group_log(sigma), payload).
Vec semidirect_log(const SemidirectElement& a);

/// Finite-difference bracket of two semidirect algebra elements via the
/// group commutator exp(hX) exp(hY) exp(-hX) exp(-hY); the h^3 term is
/// cancelled by averaging the h and -h curves, leaving O(h^2) error.
Vec semidirect_fd_bracket(GroupId id, SemiVariant variant, const Vec& x1,
                          const Vec& w1, const Vec& x2, const Vec& w2,
                          double h = 1e-4);

/// Norm of the element (convenience for flattening-based tests).
double semidirect_membership_residual(const SemidirectElement& a);

}  // namespace cskit
