// Copyright 2026 The liegeo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "liegeo/error.hpp"
#include "liegeo/exact_scalar.hpp"
#include "liegeo/matrix.hpp"

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace liegeo {

template <class T>
using Vector = std::vector<T>;
using ExactVector = Vector<ExactScalar>;
using FloatVector = Vector<double>;

/// Signs eps_j of an orthonormal basis; at most one -1 (Riemannian or Lorentzian).
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<int> eps);

  std::size_t size() const { return eps_.size(); }
  int operator[](std::size_t i) const { return eps_[i]; }
  const std::vector<int>& values() const { return eps_; }
  /// Number of -1 entries.
  std::size_t index() const;
  bool lorentzian() const { return index() == 1; }
  /// Position of the timelike basis vector; only meaningful when lorentzian().
  std::size_t timelike_position() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<int> eps_;
};

/// Dense exact rank-3 tensor c[i][j][k] = c_ij^k (0-based).
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  const ExactScalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  ExactScalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  /// Sets c_ij^k = v and c_ji^k = -v.
  void set_bracket(std::size_t i, std::size_t j, std::size_t k, const ExactScalar& v) {
    (*this)(i, j, k) = v;
    (*this)(j, i, k) = -v;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<ExactScalar> c_;
};

template <class T>
struct StructureEntry {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  T value;
};

/**
 * @brief A finite-dimensional Lie algebra with a metric given by an orthonormal basis.
 *
 * Holds the exact structure constants and a cached floating-point copy. Construction
 * checks only shapes and the signature; the algebraic identities are audited by
 * validate(), so that deliberately broken fixtures stay representable.
 */
class MetricLieAlgebra {
 public:
  MetricLieAlgebra() = default;
  MetricLieAlgebra(std::string name, Signature signature, StructureTensor c,
                   std::vector<std::string> labels = {});

  const std::string& name() const { return name_; }
  std::size_t dim() const { return signature_.size(); }
  const Signature& signature() const { return signature_; }
  int eps(std::size_t i) const { return signature_[i]; }
  const StructureTensor& structure() const { return c_; }
  const ExactScalar& c(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }
  /// Basis labels ("e1", "U", "X1", ...).
  const std::vector<std::string>& labels() const { return labels_; }
  bool is_abelian() const { return exact_entries_.empty(); }

  /// Nonzero structure constants in the requested scalar type.
  template <class T>
  const std::vector<StructureEntry<T>>& entries() const {
    if constexpr (ScalarTraits<T>::exact) {
      return exact_entries_;
    } else {
      return float_entries_;
    }
  }

  /// Basis vector e_i (0-based).
  template <class T>
  Vector<T> basis_vector(std::size_t i) const {
    Vector<T> v(dim(), T(0));
    v.at(i) = T(1);
    return v;
  }

 private:
  std::string name_;
  Signature signature_;
  StructureTensor c_;
  std::vector<std::string> labels_;
  std::vector<StructureEntry<ExactScalar>> exact_entries_;
  std::vector<StructureEntry<double>> float_entries_;
};

ExactVector to_exact(std::span<const std::int64_t> v);
FloatVector to_float(std::span<const ExactScalar> v);

namespace detail {

inline void require_dim(const MetricLieAlgebra& alg, std::size_t n, const char* what) {
  if (n != alg.dim()) {
    throw GeometryError(ErrorKind::DimensionMismatch,
                        std::string(what) + ": vector length " + std::to_string(n) +
                            " does not match algebra dimension " + std::to_string(alg.dim()));
  }
}

template <class T>
bool is_zero_vector(std::span<const T> v) {
  for (const T& x : v) {
    if (!(x == T(0))) return false;
  }
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Linear operations. Every function is templated on the scalar so the exact
// (ExactScalar) and floating-point (double) paths share one implementation.
// ---------------------------------------------------------------------------

/// <v,w> = sum_i eps_i v_i w_i.
template <class T>
T inner(const MetricLieAlgebra& alg, std::span<const T> v, std::span<const T> w) {
  detail::require_dim(alg, v.size(), "inner");
  detail::require_dim(alg, w.size(), "inner");
  T s(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (alg.eps(i) > 0) {
      s += v[i] * w[i];
    } else {
      s -= v[i] * w[i];
    }
  }
  return s;
}

template <class T>
Vector<T> bracket(const MetricLieAlgebra& alg, std::span<const T> v, std::span<const T> w) {
  detail::require_dim(alg, v.size(), "bracket");
  detail::require_dim(alg, w.size(), "bracket");
  Vector<T> out(alg.dim(), T(0));
  for (const auto& e : alg.entries<T>()) {
    if (v[e.i] == T(0) || w[e.j] == T(0)) continue;
    out[e.k] += v[e.i] * w[e.j] * e.value;
  }
  return out;
}

template <class T>
Vector<T> bracket(const MetricLieAlgebra& alg, const Vector<T>& v, const Vector<T>& w) {
  return bracket<T>(alg, std::span<const T>(v), std::span<const T>(w));
}

/// Levi-Civita connection of left-invariant fields: nabla_v w = 1/2 [v, w].
template <class T>
Vector<T> levi_civita(const MetricLieAlgebra& alg, const Vector<T>& v, const Vector<T>& w) {
  Vector<T> out = bracket(alg, v, w);
  for (auto& x : out) x = x / T(2);
  return out;
}

/**
 * Pointwise variant for a field W = sum_j w_j(p) X_j with variable coefficients:
 * nabla_V W = sum_j V(w_j) X_j + 1/2 [V, W], where `w_derivative` holds V(w_j).
 */
template <class T>
Vector<T> levi_civita_pointwise(const MetricLieAlgebra& alg, const Vector<T>& v,
                                const Vector<T>& w, const Vector<T>& w_derivative) {
  detail::require_dim(alg, w_derivative.size(), "levi_civita_pointwise");
  Vector<T> out = levi_civita(alg, v, w);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += w_derivative[k];
  return out;
}

/// R(x,y)z = -1/4 [[x,y],z].
template <class T>
Vector<T> curvature_tensor(const MetricLieAlgebra& alg, const Vector<T>& x, const Vector<T>& y,
                           const Vector<T>& z) {
  Vector<T> out = bracket(alg, bracket(alg, x, y), z);
  for (auto& c : out) c = -c / T(4);
  return out;
}

template <class T>
struct SectionalCurvature {
  bool defined = true;
  T value{0};
  std::string reason;  // set when !defined
};

namespace detail {

template <class T>
T plane_gram_determinant(const MetricLieAlgebra& alg, const Vector<T>& x, const Vector<T>& y,
                         double tol) {
  const T xx = inner<T>(alg, x, x);
  const T yy = inner<T>(alg, y, y);
  const T xy = inner<T>(alg, x, y);
  const T q = xx * yy - xy * xy;
  bool degenerate;
  if constexpr (ScalarTraits<T>::exact) {
    degenerate = q.is_zero();
  } else {
    double scale = 0;
    for (std::size_t i = 0; i < x.size(); ++i) scale += x[i] * x[i];
    double sy = 0;
    for (std::size_t i = 0; i < y.size(); ++i) sy += y[i] * y[i];
    degenerate = std::abs(q) <= tol * scale * sy;
  }
  if (degenerate) {
    throw GeometryError(ErrorKind::DegeneratePlane, "sectional_curvature: degenerate 2-plane");
  }
  return q;
}

}  // namespace detail

/**
 * K(x,y) = 1/4 <[x,y],[x,y]> / (<x,x><y,y> - <x,y>^2).
 *
 * For an orthonormal pair this is 1/4 eps_x eps_y eps_[x,y] |[x,y]|^2; the general form
 * accepts any basis of a nondegenerate plane, which keeps rational inputs rational.
 * A nonzero null bracket yields an undefined result.
 */
template <class T>
SectionalCurvature<T> sectional_curvature(const MetricLieAlgebra& alg, const Vector<T>& x,
                                          const Vector<T>& y, double tol = 1e-10) {
  const T q = detail::plane_gram_determinant(alg, x, y, tol);
  const Vector<T> b = bracket(alg, x, y);
  SectionalCurvature<T> out;
  const T bb = inner<T>(alg, b, b);
  if constexpr (ScalarTraits<T>::exact) {
    if (detail::is_zero_vector<T>(b)) return out;
    if (bb.is_zero()) {
      out.defined = false;
      out.reason = "undefined: null bracket";
      return out;
    }
  } else {
    double euclid = 0;
    for (double c : b) euclid += c * c;
    double scale = 0;
    for (double c : x) scale += c * c;
    double sy = 0;
    for (double c : y) sy += c * c;
    if (euclid <= tol * tol * scale * sy) return out;
    if (std::abs(bb) <= tol * euclid) {
      out.defined = false;
      out.reason = "undefined: null bracket";
      return out;
    }
  }
  out.value = bb / (T(4) * q);
  return out;
}

/// Cross-check path: K(x,y) = <R(x,y)y, x> / (<x,x><y,y> - <x,y>^2).
template <class T>
T sectional_curvature_from_tensor(const MetricLieAlgebra& alg, const Vector<T>& x,
                                  const Vector<T>& y, double tol = 1e-10) {
  const T q = detail::plane_gram_determinant(alg, x, y, tol);
  return inner<T>(alg, curvature_tensor(alg, x, y, y), x) / q;
}

/// Matrix of ad(v): column j holds [v, e_j].
template <class T>
Matrix<T> ad_matrix(const MetricLieAlgebra& alg, const Vector<T>& v) {
  detail::require_dim(alg, v.size(), "ad_matrix");
  const std::size_t n = alg.dim();
  Matrix<T> m(n, n);
  for (const auto& e : alg.entries<T>()) {
    if (v[e.i] == T(0)) continue;
    m(e.k, e.j) += v[e.i] * e.value;
  }
  return m;
}

/// B(v,w) = tr(ad v ad w).
template <class T>
T killing_form(const MetricLieAlgebra& alg, const Vector<T>& v, const Vector<T>& w) {
  const Matrix<T> a = ad_matrix(alg, v);
  const Matrix<T> b = ad_matrix(alg, w);
  const std::size_t n = alg.dim();
  T s(0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (a(k, l) == T(0) || b(l, k) == T(0)) continue;
      s += a(k, l) * b(l, k);
    }
  }
  return s;
}

/// B(e_a, e_b) = sum_{k,l} c_al^k c_bk^l.
template <class T>
Matrix<T> killing_matrix(const MetricLieAlgebra& alg) {
  const std::size_t n = alg.dim();
  Matrix<T> out(n, n);
  const auto& es = alg.entries<T>();
  for (const auto& p : es) {      // c_{a l}^{k}
    for (const auto& q : es) {    // c_{b k}^{l}
      if (q.j != p.k || q.k != p.j) continue;
      out(p.i, q.i) += p.value * q.value;
    }
  }
  return out;
}

/// Ric(v,w) = -1/4 B(v,w).
template <class T>
T ricci(const MetricLieAlgebra& alg, const Vector<T>& v, const Vector<T>& w) {
  return -killing_form(alg, v, w) / T(4);
}

/// Ric(v,w) by direct contraction sum_k eps_k <R(v, e_k) e_k, w>.
template <class T>
T ricci_contraction(const MetricLieAlgebra& alg, const Vector<T>& v, const Vector<T>& w) {
  T s(0);
  for (std::size_t k = 0; k < alg.dim(); ++k) {
    const Vector<T> ek = alg.basis_vector<T>(k);
    const T term = inner<T>(alg, curvature_tensor(alg, v, ek, ek), w);
    if (alg.eps(k) > 0) {
      s += term;
    } else {
      s -= term;
    }
  }
  return s;
}

/// Directional Ricci curvature Ric(v,v)/<v,v>; equals eps_v Ric(v,v) for unit v.
template <class T>
T ricci_directional(const MetricLieAlgebra& alg, const Vector<T>& v) {
  const T vv = inner<T>(alg, v, v);
  if (vv == T(0)) {
    throw GeometryError(ErrorKind::DegenerateVector, "ricci_directional: null direction");
  }
  return ricci(alg, v, v) / vv;
}

}  // namespace liegeo
