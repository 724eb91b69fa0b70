/**
 * @file lie_algebra.cpp
 * @brief Structure-constant Lie algebra operations.
 */
#include "cskit/lie_algebra.hpp"

#include <cmath>
#include <utility>

#include <nlohmann/json.hpp>

#include "cskit/errors.hpp"
#include "cskit/json_io.hpp"

namespace cskit {

namespace {

LieAlgebra make_algebra(std::string name, std::vector<std::string> labels) {
  LieAlgebra L;
  L.name = std::move(name);
  L.dim = static_cast<int>(labels.size());
  L.labels = std::move(labels);
  L.c.assign(static_cast<std::size_t>(L.dim) * L.dim * L.dim, 0.0);
  return L;
}

// Euclidean and Minkowski cross products on R^3; the Minkowski one is the
// vector part of the split-quaternion product and satisfies
// [H(a), H(b)] = H(a x b) for the corresponding hat map.
Eigen::Vector3d cross_e(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  return a.cross(b);
}
Eigen::Vector3d cross_m(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  return {a.z() * b.y() - a.y() * b.z(),
          a.z() * b.x() - a.x() * b.z(),
          a.x() * b.y() - a.y() * b.x()};
}

// Motion algebras (rotations + translations) share one table shape:
// [(w1,v1),(w2,v2)] = (w1 x w2, w1 x v2 - w2 x v1).
template <typename Cross>
void fill_motion_algebra(LieAlgebra& L, Cross cross) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const Eigen::Vector3d w =
          cross(Eigen::Vector3d::Unit(i), Eigen::Vector3d::Unit(j));
      for (int k = 0; k < 3; ++k) {
        if (w(k) != 0.0) {
          L.set(i, j, k, w(k));          // rotation-rotation
          L.set(i, 3 + j, 3 + k, w(k));  // rotation acting on translation
          L.set(3 + j, i, 3 + k, -w(k));
        }
      }
    }
  }
}

}  // namespace

LieAlgebra builtin_algebra(const std::string& name) {
  const double r2 = std::sqrt(2.0);
  if (name == "h3") {
    LieAlgebra L = make_algebra("h3", {"e1", "e2", "e3"});
    L.set_pair(0, 1, 2, 1.0);
    return L;
  }
  if (name == "so3") {
    LieAlgebra L = make_algebra("so3", {"f1", "f2", "f3"});
    L.set_pair(0, 1, 2, 1.0 / r2);
    L.set_pair(1, 2, 0, 1.0 / r2);
    L.set_pair(2, 0, 1, 1.0 / r2);
    return L;
  }
  if (name == "su2") {
    LieAlgebra L = make_algebra("su2", {"X1", "X2", "X3"});
    L.set_pair(0, 1, 2, 2.0);
    L.set_pair(1, 2, 0, 2.0);
    L.set_pair(2, 0, 1, 2.0);
    return L;
  }
  if (name == "sl2" || name == "so21") {
    // Isomorphic algebras in bases chosen so the Killing form is exactly
    // diag(-1, 1, 1): e1 compact, e2 and e3 boost-like.
    LieAlgebra L = make_algebra(
        name, name == "sl2"
                  ? std::vector<std::string>{"e1", "e2", "e3"}
                  : std::vector<std::string>{"e1'", "e2'", "e3'"});
    L.set_pair(0, 1, 2, -1.0 / r2);
    L.set_pair(0, 2, 1, 1.0 / r2);
    L.set_pair(1, 2, 0, 1.0 / r2);
    return L;
  }
  if (name == "so31") {
    // S1..S3 boosts, S4..S6 rotations; (S1,S4), (S2,S5), (S3,S6) commute.
    LieAlgebra L =
        make_algebra("so31", {"S1", "S2", "S3", "S4", "S5", "S6"});
    L.set_pair(0, 1, 5, -1.0);
    L.set_pair(0, 2, 4, -1.0);
    L.set_pair(0, 4, 2, -1.0);
    L.set_pair(0, 5, 1, -1.0);
    L.set_pair(1, 2, 3, 1.0);
    L.set_pair(1, 3, 2, 1.0);
    L.set_pair(1, 5, 0, 1.0);
    L.set_pair(2, 3, 1, -1.0);
    L.set_pair(2, 4, 0, 1.0);
    L.set_pair(3, 4, 5, 1.0);
    L.set_pair(3, 5, 4, -1.0);
    L.set_pair(4, 5, 3, 1.0);
    return L;
  }
  if (name == "se3") {
    LieAlgebra L =
        make_algebra("se3", {"w1", "w2", "w3", "v1", "v2", "v3"});
    fill_motion_algebra(L, cross_e);
    return L;
  }
  if (name == "se21") {
    LieAlgebra L =
        make_algebra("se21", {"w1", "w2", "w3", "v1", "v2", "v3"});
    fill_motion_algebra(L, cross_m);
    return L;
  }
  throw UsageError("unknown algebra: " + name);
}

std::vector<std::string> builtin_algebra_names() {
  return {"so3", "su2", "sl2", "so21", "so31", "h3", "se3", "se21"};
}

Vec bracket(const LieAlgebra& L, const Vec& x, const Vec& y) {
  const int n = L.dim;
  Vec out = Vec::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (x(i) == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      if (y(j) == 0.0) continue;
      for (int k = 0; k < n; ++k) out(k) += x(i) * y(j) * L.get(i, j, k);
    }
  }
  return out;
}

Mat ad_basis(const LieAlgebra& L, int m) {
  const int n = L.dim;
  Mat a = Mat::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) a(k, j) = L.get(m, j, k);
  return a;
}

Mat ad_matrix(const LieAlgebra& L, const Vec& x) {
  const int n = L.dim;
  Mat a = Mat::Zero(n, n);
  for (int m = 0; m < n; ++m)
    if (x(m) != 0.0) a += x(m) * ad_basis(L, m);
  return a;
}

Mat coad_matrix(const LieAlgebra& L, const Vec& x) {
  return -ad_matrix(L, x).transpose();
}

Mat killing_form(const LieAlgebra& L) {
  const int n = L.dim;
  std::vector<Mat> ads;
  ads.reserve(n);
  for (int m = 0; m < n; ++m) ads.push_back(ad_basis(L, m));
  Mat K(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) K(i, j) = (ads[i] * ads[j]).trace();
  return K;
}

double antisymmetry_residual(const LieAlgebra& L) {
  double r = 0.0;
  for (int i = 0; i < L.dim; ++i)
    for (int j = 0; j < L.dim; ++j)
      for (int k = 0; k < L.dim; ++k)
        r = std::max(r, std::abs(L.get(i, j, k) + L.get(j, i, k)));
  return r;
}

double jacobi_residual(const LieAlgebra& L) {
  const int n = L.dim;
  double r = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        Vec acc = Vec::Zero(n);
        for (int t = 0; t < n; ++t)
          for (int k = 0; k < n; ++k) {
            acc(k) += L.get(a, b, t) * L.get(t, d, k);
            acc(k) += L.get(b, d, t) * L.get(t, a, k);
            acc(k) += L.get(d, a, t) * L.get(t, b, k);
          }
        r = std::max(r, max_abs(acc));
      }
  return r;
}

int derived_dim(const LieAlgebra& L) {
  const int n = L.dim;
  Mat span(n, n * (n - 1) / 2);
  int col = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) span(k, col) = L.get(i, j, k);
      ++col;
    }
  if (col == 0) return 0;
  return matrix_rank(span.leftCols(col));
}

std::vector<Mat> centralizer_basis(const LieAlgebra& L) {
  const int n = L.dim;
  // Unknown A (row-major flattened); equations (A ad_m - ad_m A)_{pq} = 0.
  Mat sys(n * n * n, n * n);
  sys.setZero();
  int row = 0;
  for (int m = 0; m < n; ++m) {
    const Mat adm = ad_basis(L, m);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        for (int r = 0; r < n; ++r) {
          sys(row, p * n + r) += adm(r, q);
          sys(row, r * n + q) -= adm(p, r);
        }
        ++row;
      }
  }
  const Mat ns = nullspace(sys);
  std::vector<Mat> out;
  for (int t = 0; t < ns.cols(); ++t) {
    Mat A(n, n);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) A(p, q) = ns(p * n + q, t);
    out.push_back(std::move(A));
  }
  return out;
}

ComplexStructureResult complex_structure(const LieAlgebra& L) {
  const int n = L.dim;
  for (const Mat& B : centralizer_basis(L)) {
    Mat B0 = B - (B.trace() / n) * Mat::Identity(n, n);
    if (B0.norm() < 1e-8) continue;
    const double q = -(B0 * B0).trace() / n;
    if (q <= 1e-12) continue;  // traceless square not negative-definite-like
    Mat J = B0 / std::sqrt(q);
    // Normalize the overall sign: first nonzero entry in row-major order > 0.
    for (int p = 0; p < n * n; ++p) {
      const double v = J(p / n, p % n);
      if (std::abs(v) > 1e-9) {
        if (v < 0) J = -J;
        break;
      }
    }
    if ((J * J + Mat::Identity(n, n)).norm() < 1e-8)
      return {true, std::move(J)};
  }
  return {false, Mat()};
}

LieAlgebra cotangent_algebra(const LieAlgebra& L) {
  const int n = L.dim;
  std::vector<std::string> labels = L.labels;
  for (const auto& s : L.labels) labels.push_back(s + "*");
  LieAlgebra out = make_algebra(L.name + "_cotangent", std::move(labels));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double v = L.get(i, j, k);
        if (v != 0.0) out.set(i, j, k, v);
      }
  // [(e_i, 0), (0, f_j*)] = (0, ad*(e_i) f_j*), coordinates -c(i,k,j) on f_k*.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double v = -L.get(i, k, j);
        if (v != 0.0) {
          out.set(i, n + j, n + k, v);
          out.set(n + j, i, n + k, -v);
        }
      }
  return out;
}

LieAlgebra tangent_algebra(const LieAlgebra& L) {
  const int n = L.dim;
  std::vector<std::string> labels = L.labels;
  for (const auto& s : L.labels) labels.push_back(s + "~");
  LieAlgebra out = make_algebra(L.name + "_tangent", std::move(labels));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double v = L.get(i, j, k);
        if (v == 0.0) continue;
        out.set(i, j, k, v);
        out.set(i, n + j, n + k, v);
        out.set(n + j, i, n + k, -v);
      }
  return out;
}

double ad_invariance_residual(const LieAlgebra& L, const Mat& B) {
  const int n = L.dim;
  double r = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int t = 0; t < n; ++t)
          acc += L.get(i, j, t) * B(t, k) + L.get(i, k, t) * B(j, t);
        r = std::max(r, std::abs(acc));
      }
  return r;
}

std::vector<Mat> ad_invariant_symmetric_forms(const LieAlgebra& L) {
  const int n = L.dim;
  // Unknown symmetric B indexed by pairs p <= q.
  std::vector<std::pair<int, int>> idx;
  for (int p = 0; p < n; ++p)
    for (int q = p; q < n; ++q) idx.emplace_back(p, q);
  auto pos = [&](int p, int q) {
    if (p > q) std::swap(p, q);
    // offset of (p,q) in the triangular enumeration
    return p * n - p * (p - 1) / 2 + (q - p);
  };
  Mat sys(n * n * n, static_cast<int>(idx.size()));
  sys.setZero();
  int row = 0;
  for (int m = 0; m < n; ++m)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        for (int t = 0; t < n; ++t) {
          sys(row, pos(t, b)) += L.get(m, a, t);
          sys(row, pos(a, t)) += L.get(m, b, t);
        }
        ++row;
      }
  const Mat ns = nullspace(sys);
  std::vector<Mat> out;
  for (int t = 0; t < ns.cols(); ++t) {
    Mat B = Mat::Zero(n, n);
    for (std::size_t s = 0; s < idx.size(); ++s) {
      B(idx[s].first, idx[s].second) = ns(static_cast<int>(s), t);
      B(idx[s].second, idx[s].first) = ns(static_cast<int>(s), t);
    }
    out.push_back(std::move(B));
  }
  return out;
}

LieAlgebra algebra_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
    throw UsageError("algebra JSON needs an integer \"dim\"");
  const int n = j["dim"].get<int>();
  if (n < 1 || n > 64) throw UsageError("algebra dim out of range");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() ||
        static_cast<int>(j["labels"].size()) != n)
      throw UsageError("\"labels\" must be an array of dim strings");
    for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
  } else {
    for (int t = 0; t < n; ++t) labels.push_back("e" + std::to_string(t));
  }
  LieAlgebra L = make_algebra(j.value("name", std::string("custom")),
                              std::move(labels));
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array())
      throw UsageError("\"brackets\" must be an array");
    for (const auto& b : j["brackets"]) {
      if (!b.contains("i") || !b.contains("j") || !b.contains("coeffs"))
        throw UsageError("bracket entries need \"i\", \"j\", \"coeffs\"");
      const int i = b["i"].get<int>();
      const int jj = b["j"].get<int>();
      if (i < 0 || jj < 0 || i >= n || jj >= n)
        throw UsageError("bracket index out of range");
      if (i >= jj)
        throw UsageError("bracket entries must have i < j");
      for (const auto& [key, val] : b["coeffs"].items()) {
        int k;
        try {
          k = std::stoi(key);
        } catch (...) {
          throw UsageError("coeff key is not an index: " + key);
        }
        if (k < 0 || k >= n) throw UsageError("coeff index out of range");
        L.set_pair(i, jj, k, val.get<double>());
      }
    }
  }
  const double jr = jacobi_residual(L);
  if (jr > 1e-12)
    throw PropertyError("Jacobi identity fails: residual " +
                        jio::num12(jr));
  return L;
}

std::string algebra_to_json(const LieAlgebra& L) {
  jio::Value root = jio::Value::object();
  root.set("name", jio::Value::string(L.name));
  root.set("dim", jio::Value::integer(L.dim));
  jio::Value labels = jio::Value::array();
  for (const auto& l : L.labels) labels.push(jio::Value::string(l));
  root.set("labels", std::move(labels));
  jio::Value brackets = jio::Value::array();
  for (int i = 0; i < L.dim; ++i)
    for (int j = i + 1; j < L.dim; ++j) {
      jio::Value coeffs = jio::Value::object();
      bool any = false;
      for (int k = 0; k < L.dim; ++k)
        if (L.get(i, j, k) != 0.0) {
          coeffs.set(std::to_string(k), jio::Value::number(L.get(i, j, k)));
          any = true;
        }
      if (any) {
        jio::Value entry = jio::Value::object();
        entry.set("i", jio::Value::integer(i));
        entry.set("j", jio::Value::integer(j));
        entry.set("coeffs", std::move(coeffs));
        brackets.push(std::move(entry));
      }
    }
  root.set("brackets", std::move(brackets));
  return root.dump();
}

}  // namespace cskit
