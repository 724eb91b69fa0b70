/**
 * @file lie_algebra.hpp
 * @brief Finite-dimensional real Lie algebras given by structure constants.
 *
 * An algebra is a basis e_0..e_{n-1} together with constants c(i,j,k) such
 * that [e_i, e_j] = sum_k c(i,j,k) e_k.  Everything downstream (Killing
 * forms, centralizers, cotangent metrics) is computed from this table, so
 * the built-in algebras carry exact tables rather than matrix bases; the
 * matrix realizations live in groups.hpp and are cross-checked in tests.
 *
 * Built-in algebras (names accepted by builtin_algebra):
 *   so3   rotations, basis f_i with [f1,f2] = (1/sqrt2) f3 cyclically;
 *         the basis is scaled so the Killing form is exactly -I.
 *   su2   basis X1, X2, X3 with [X1,X2] = 2 X3 cyclically; Killing = -8 I.
 *   sl2   2x2 traceless matrices in a basis with Killing = diag(-1,1,1).
 *   so21  Lorentz algebra of signature (1,2); same structure constants and
 *         Killing form as sl2 (they are isomorphic).
 *   so31  Lorentz algebra of signature (3,1), basis S1..S6 (three boosts,
 *         then three rotations); Killing = 4 diag(1,1,1,-1,-1,-1).
 *   h3    Heisenberg algebra, [e1,e2] = e3.
 *   se3   Euclidean motions: three rotation generators (cross-product hat
 *         matrices, unscaled) followed by three translations.
 *   se21  Minkowski motions over so21, ordered the same way.
 */
#pragma once

#include <string>
#include <vector>

#include "cskit/linalg.hpp"

namespace cskit {

struct LieAlgebra {
  std::string name;
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<double> c;  ///< dense table, index (i*dim + j)*dim + k

  double get(int i, int j, int k) const { return c[(i * dim + j) * dim + k]; }
  void set(int i, int j, int k, double v) { c[(i * dim + j) * dim + k] = v; }
  /// Store [e_i,e_j] = v e_k together with the antisymmetric mirror.
  void set_pair(int i, int j, int k, double v) {
    set(i, j, k, v);
    set(j, i, k, -v);
  }
};

/// Named built-in algebra (see the list above).  Throws UsageError on an
/// unknown name.
LieAlgebra builtin_algebra(const std::string& name);

/// Names of all built-in algebras, in registry order.
std::vector<std::string> builtin_algebra_names();

/// [x, y] in basis coordinates.
Vec bracket(const LieAlgebra& L, const Vec& x, const Vec& y);

/// Matrix of ad(x): ad(x) y = [x, y].
Mat ad_matrix(const LieAlgebra& L, const Vec& x);

/// Matrix of ad(e_m) for a basis element.
Mat ad_basis(const LieAlgebra& L, int m);

/// Matrix of the coadjoint action ad*(x) f = -f o ad(x) on dual coordinates;
/// equals -ad_matrix(x)^T.
Mat coad_matrix(const LieAlgebra& L, const Vec& x);

/// Killing form K(i,j) = tr(ad e_i ad e_j).
Mat killing_form(const LieAlgebra& L);

/// max |c(i,j,.) + c(j,i,.)| over the table.
double antisymmetry_residual(const LieAlgebra& L);

/// max-abs Jacobi identity defect over all basis triples.
double jacobi_residual(const LieAlgebra& L);

/// Dimension of the derived algebra [g, g].
int derived_dim(const LieAlgebra& L);

/// Basis of the centralizer of ad(g) in End(g): all A with
/// A ad(x) = ad(x) A for every x, i.e. A[x,y] = [x, Ay].
std::vector<Mat> centralizer_basis(const LieAlgebra& L);

/// Invariant complex structure extracted from the centralizer, when one
/// exists: J with J^2 = -I commuting with every ad(x).  The traceless part of
/// a centralizer element is rescaled by sqrt(-tr(B0^2)/n) and the overall
/// sign is fixed so the first nonzero entry (row-major) is positive.
struct ComplexStructureResult {
  bool found = false;
  Mat J;
};
ComplexStructureResult complex_structure(const LieAlgebra& L);

/// Cotangent-bundle algebra g x| g*: dimension 2n,
/// [(x,f),(y,g)] = ([x,y], ad*(x) g - ad*(y) f).
LieAlgebra cotangent_algebra(const LieAlgebra& L);

/// Tangent-bundle algebra g x| g: dimension 2n,
/// [(x1,y1),(x2,y2)] = ([x1,x2], [x1,y2] - [x2,y1]).
LieAlgebra tangent_algebra(const LieAlgebra& L);

/// max over basis triples of |B([x,y],z) + B(y,[x,z])| -- zero iff the
/// symmetric form B is ad-invariant.
double ad_invariance_residual(const LieAlgebra& L, const Mat& B);

/// Basis of the space of ad-invariant symmetric bilinear forms.
std::vector<Mat> ad_invariant_symmetric_forms(const LieAlgebra& L);

/// Parse an algebra from its JSON description:
///   {"dim": n, "labels": [...], "brackets":
///     [{"i": 0, "j": 1, "coeffs": {"2": 1.0}}, ...]}
/// Entries must have i < j; the mirror is filled automatically.  Structural
/// problems throw UsageError; a Jacobi defect above 1e-12 throws
/// PropertyError.
LieAlgebra algebra_from_json(const std::string& text);

/// Serialize in the same schema (only i < j entries, nonzero coefficients).
std::string algebra_to_json(const LieAlgebra& L);

}  // namespace cskit
