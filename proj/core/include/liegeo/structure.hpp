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

// Structural audits of a metric Lie algebra: identity checks, change of basis,
// center, semisimplicity and codimension-one subalgebras. All exact.

#include "liegeo/algebra.hpp"
#include "liegeo/check_report.hpp"
#include "liegeo/exact_linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liegeo {

struct SubspaceBasis {
  std::vector<ExactVector> vectors;
  std::size_t size() const { return vectors.size(); }
  bool empty() const { return vectors.empty(); }
};

std::size_t subspace_rank(const SubspaceBasis& basis, std::size_t ambient_dim);

/**
 * Audits antisymmetry, the Jacobi identity, ad-invariance c_ij^k eps_k = c_jk^i eps_i
 * and the trace identities c_ij^i = c_ii^j = 0. In exact mode any nonzero residual
 * fails; in float mode residuals are compared against `tol`.
 */
CheckReport validate(const MetricLieAlgebra& alg, bool exact = true, double tol = 1e-12);

struct OrthonormalBasisChange {
  MetricLieAlgebra algebra;
  /// Row a holds the coordinates of the new basis vector b_a in the input basis.
  exact::ExactMatrix basis;
};

/**
 * Rewrites an algebra given by a Gram matrix and structure constants in an arbitrary
 * basis in an orthonormal one (timelike vector last). Null pivots v_i are split as
 * (v_i + v_j, v_i - v_j) with the first partner v_j not orthogonal to v_i.
 *
 * Throws DegenerateGram, IndexTooLarge, or NotRepresentable when a normalising square
 * root falls outside Q(sqrt 2).
 */
OrthonormalBasisChange orthonormalize(const exact::ExactMatrix& gram,
                                      const StructureTensor& brackets, std::string name,
                                      std::vector<std::string> labels = {});

/// Structure constants of `alg` rewritten in the basis given by the rows of `basis`.
StructureTensor change_basis(const StructureTensor& c, const exact::ExactMatrix& basis);

/// Joint kernel of ad(e_i) over all i.
SubspaceBasis center(const MetricLieAlgebra& alg);

/// Span of all brackets [e_i, e_j], reduced to an independent basis.
SubspaceBasis derived_algebra(const MetricLieAlgebra& alg);

struct SemisimplicityCertificate {
  bool semisimple = false;
  ExactScalar determinant;                 // det of the Killing matrix
  std::optional<ExactVector> null_vector;  // Killing-nullspace vector when degenerate
};

/// Cartan's criterion: semisimple iff the Killing form is nondegenerate.
SemisimplicityCertificate is_semisimple(const MetricLieAlgebra& alg);

struct SubalgebraWitness {
  bool closed = true;
  std::size_t first = 0;   // offending pair (0-based indices into the basis)
  std::size_t second = 0;
  ExactVector bracket;     // [h_first, h_second]
  ExactVector outside;     // bracket minus its reduction onto span(h); nonzero on failure
};

/// Closure of span(h) under the bracket. Throws DependentBasis for dependent input.
SubalgebraWitness is_subalgebra(const MetricLieAlgebra& alg, const SubspaceBasis& h);

struct Codim1Subalgebra {
  SubspaceBasis basis;
  std::string construction;  // "center_orthogonal" or "derived_hyperplane"
  std::optional<ExactVector> central_normal;
};

/// A codimension-one subalgebra, preferring Z-perp for a non-null central Z.
std::optional<Codim1Subalgebra> codim1_subalgebra(const MetricLieAlgebra& alg);

}  // namespace liegeo
