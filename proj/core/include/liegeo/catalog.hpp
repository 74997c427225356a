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

#include "liegeo/algebra.hpp"
#include "liegeo/hypersurface.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace liegeo::catalog {

/**
 * @brief Parsed catalog identifier, e.g. `oscillator:m=2` or
 * `sphere:r=1.5,ambient=euclidean:n=3`.
 *
 * Parameters are comma separated `key=value` pairs. The `ambient` key swallows the
 * rest of the text, so it must come last and may carry its own parameters.
 */
struct CatalogId {
  std::string name;
  std::map<std::string, std::string> params;

  static CatalogId parse(std::string_view text);
  std::string to_string() const;

  bool has(const std::string& key) const { return params.count(key) != 0; }
  Rational rational(const std::string& key, const Rational& fallback) const;
  double real(const std::string& key, double fallback) const;
  long integer(const std::string& key, long fallback) const;
  std::string text(const std::string& key, const std::string& fallback) const;
  /// Throws InvalidParameter if a parameter outside `allowed` is present.
  void restrict_to(std::initializer_list<std::string_view> allowed) const;
};

// --- algebras --------------------------------------------------------------

MetricLieAlgebra euclidean(std::size_t n);
/// Abelian, signature (+,...,+,-).
MetricLieAlgebra minkowski(std::size_t n);
/// [e1,e2]=e3 cyclic with metric scale*delta; scale must have a square root in Q(sqrt2).
MetricLieAlgebra su2(const Rational& scale = 1);
/// su(2) plus a central direction z (last basis vector).
MetricLieAlgebra u2(const Rational& scale = 1);
/// sl(2,R) with its Killing form as metric; orthonormal basis (h, s, t), t timelike.
MetricLieAlgebra sl2r();
/// Oscillator algebra g_m in the orthonormal basis (U, X_1..X_m, Y_1..Y_m, V).
MetricLieAlgebra oscillator(std::size_t m);
/// Direct product of a line with sign `time_sign` (last basis vector) and `factor`.
MetricLieAlgebra product(const MetricLieAlgebra& factor, int time_sign = -1);

/**
 * Regression fixture for the literal reading "[X_i, Y_j] = P for all i, j". Not a
 * catalog entry: it fails ad-invariance for m >= 2 and exists to document that.
 */
MetricLieAlgebra oscillator_literal_reading(std::size_t m);

/// Basis coordinates of P and Q inside oscillator(m) (orthonormal coordinates).
ExactVector oscillator_p(std::size_t m);
ExactVector oscillator_q(std::size_t m);

MetricLieAlgebra catalog_algebra(const CatalogId& id);
MetricLieAlgebra catalog_algebra(std::string_view text);

// --- immersions ------------------------------------------------------------

/**
 * Parametric hypersurfaces used as ground truth:
 *   sphere            r, orient=out|in, ambient euclidean:n=3
 *   graph             amp, width, ambient euclidean|minkowski|product
 *   hyperbolic_graph  r, perturb, extent, ambient minkowski:n=3
 *   subgroup_slice    t, ambient product|u2|oscillator|...
 *   su2_in_u2         (SU(2) inside U(2))
 *   affine_subspace   offset, ambient euclidean|minkowski
 */
ImmersionChart catalog_immersion(const CatalogId& id);
ImmersionChart catalog_immersion(std::string_view text);

struct CatalogEntryInfo {
  std::string name;
  std::string kind;  // "algebra" or "immersion"
  std::string params;
  std::string example;
};

std::vector<CatalogEntryInfo> catalog_list();

bool is_algebra_name(std::string_view name);
bool is_immersion_name(std::string_view name);

}  // namespace liegeo::catalog
