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

#include "liegeo/catalog.hpp"
#include "liegeo/structure.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace liegeo;
using liegeo::catalog::catalog_algebra;

namespace {

ExactScalar q(std::int64_t p, std::int64_t r = 1) { return ExactScalar::fraction(p, r); }

ExactVector basis_vec(const MetricLieAlgebra& alg, const std::string& label) {
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (alg.labels()[i] == label) return alg.basis_vector<ExactScalar>(i);
  }
  throw std::logic_error("no label " + label);
}

}  // namespace

TEST_CASE("every catalog algebra validates exactly") {
  for (const auto& id : test::catalog_algebra_ids()) {
    CAPTURE(id);
    const CheckReport r = validate(catalog_algebra(id), true);
    CHECK(r.passed());
    for (const auto& e : r.entries) CHECK(e.residual == "0");
  }
}

TEST_CASE("float validation uses the tolerance") {
  const CheckReport r = validate(catalog_algebra("oscillator:m=2"), false, 1e-12);
  CHECK(r.passed());
  CHECK_FALSE(r.exact);
}

TEST_CASE("literal bracket reading fails ad-invariance with a located residual") {
  const MetricLieAlgebra lit = catalog::oscillator_literal_reading(2);
  const CheckReport r = validate(lit, true);
  CHECK_FALSE(r.passed());
  const CheckEntry* ad = r.find("ad_invariance");
  REQUIRE(ad != nullptr);
  CHECK_FALSE(ad->passed);
  CHECK(ad->residual == "1/2*sqrt2");
  CHECK(ad->location == "(1,2,5)");
  CHECK(ad->violations > 0);
  CHECK(r.find("antisymmetry")->passed);
  CHECK(r.find("jacobi")->passed);
  // One oscillator factor has no i != j pairs, so the reading is harmless there.
  CHECK(validate(catalog::oscillator_literal_reading(1), true).passed());
}

TEST_CASE("center") {
  CHECK(center(catalog::su2()).empty());
  CHECK(center(catalog::u2()).size() == 1);
  CHECK(center(catalog::euclidean(3)).size() == 3);
  for (std::size_t m = 1; m <= 3; ++m) {
    const MetricLieAlgebra osc = catalog::oscillator(m);
    const SubspaceBasis z = center(osc);
    REQUIRE(z.size() == 1);
    // span{P}: z is a multiple of P.
    SubspaceBasis both{{z.vectors[0], catalog::oscillator_p(m)}};
    CHECK(subspace_rank(both, osc.dim()) == 1);
  }
}

TEST_CASE("Cartan criterion") {
  const auto su2 = is_semisimple(catalog::su2());
  CHECK(su2.semisimple);
  CHECK(su2.determinant == q(-8));
  const auto sl2 = is_semisimple(catalog::sl2r());
  CHECK(sl2.semisimple);
  CHECK(sl2.determinant == q(-1));
  for (std::size_t m = 1; m <= 3; ++m) {
    const auto osc = is_semisimple(catalog::oscillator(m));
    CHECK_FALSE(osc.semisimple);
    CHECK(osc.determinant.is_zero());
    CHECK(osc.null_vector.has_value());
  }
  CHECK_FALSE(is_semisimple(catalog::u2()).semisimple);
}

TEST_CASE("derived algebra") {
  CHECK(derived_algebra(catalog::u2()).size() == 3);
  CHECK(derived_algebra(catalog::su2()).size() == 3);
  CHECK(derived_algebra(catalog::euclidean(4)).empty());
  // [g_m, g_m] = span{P, X_i, Y_i}.
  CHECK(derived_algebra(catalog::oscillator(2)).size() == 5);
}

TEST_CASE("oscillator subalgebra audit") {
  for (std::size_t m = 1; m <= 3; ++m) {
    CAPTURE(m);
    const MetricLieAlgebra osc = catalog::oscillator(m);
    SubspaceBasis pxy{{catalog::oscillator_p(m)}};
    SubspaceBasis uxy{{basis_vec(osc, "U")}};
    for (std::size_t i = 1; i <= m; ++i) {
      for (const char* s : {"X", "Y"}) {
        pxy.vectors.push_back(basis_vec(osc, s + std::to_string(i)));
        uxy.vectors.push_back(basis_vec(osc, s + std::to_string(i)));
      }
    }
    CHECK(is_subalgebra(osc, pxy).closed);
    const SubalgebraWitness w = is_subalgebra(osc, uxy);
    CHECK_FALSE(w.closed);
    CHECK_FALSE(detail::is_zero_vector<ExactScalar>(w.outside));
    // The witness bracket is [X_i, Y_i] = P.
    SubspaceBasis with_p{{w.bracket, catalog::oscillator_p(m)}};
    CHECK(subspace_rank(with_p, osc.dim()) == 1);
  }
}

TEST_CASE("codimension-one subalgebras") {
  const auto u2 = codim1_subalgebra(catalog::u2());
  REQUIRE(u2.has_value());
  CHECK(u2->construction == "center_orthogonal");
  CHECK(u2->basis.size() == 3);
  CHECK(is_subalgebra(catalog::u2(), u2->basis).closed);

  CHECK_FALSE(codim1_subalgebra(catalog::su2()).has_value());

  const MetricLieAlgebra osc = catalog::oscillator(2);
  const auto o = codim1_subalgebra(osc);
  REQUIRE(o.has_value());
  CHECK(o->basis.size() == 5);
  CHECK(is_subalgebra(osc, o->basis).closed);
}

TEST_CASE("orthonormalize") {
  // su2 written in the basis (e1, e1 + e2, e3): Gram [[1,1,0],[1,2,0],[0,0,1]].
  exact::ExactMatrix gram(3, 3);
  gram(0, 0) = q(1);
  gram(0, 1) = q(1);
  gram(1, 0) = q(1);
  gram(1, 1) = q(2);
  gram(2, 2) = q(1);
  StructureTensor c(3);
  // f1 = e1, f2 = e1 + e2, f3 = e3: [f1,f2] = e3 = f3, [f2,f3] = e1 + ... = f1 + (f2 - f1)
  c.set_bracket(0, 1, 2, q(1));
  // [f2, f3] = [e1,e3] + [e2,e3] = -e2 + e1 = 2 f1 - f2
  c.set_bracket(1, 2, 0, q(2));
  c.set_bracket(1, 2, 1, q(-1));
  // [f3, f1] = [e3, e1] = e2 = f2 - f1
  c.set_bracket(2, 0, 1, q(1));
  c.set_bracket(2, 0, 0, q(-1));
  const auto on = orthonormalize(gram, c, "su2-skew");
  CHECK(on.algebra.signature().index() == 0);
  CHECK(validate(on.algebra, true).passed());
  CHECK(is_semisimple(on.algebra).determinant == q(-8));

  exact::ExactMatrix degenerate(2, 2);
  degenerate(0, 0) = q(1);
  degenerate(0, 1) = q(1);
  degenerate(1, 0) = q(1);
  degenerate(1, 1) = q(1);
  CHECK(test::error_kind([&] { orthonormalize(degenerate, StructureTensor(2), "d"); }) ==
        ErrorKind::DegenerateGram);

  exact::ExactMatrix three(1, 1);
  three(0, 0) = q(3);
  CHECK(test::error_kind([&] { orthonormalize(three, StructureTensor(1), "t"); }) ==
        ErrorKind::NotRepresentable);

  exact::ExactMatrix two_negative(2, 2);
  two_negative(0, 0) = q(-1);
  two_negative(1, 1) = q(-1);
  CHECK(test::error_kind([&] { orthonormalize(two_negative, StructureTensor(2), "n"); }) ==
        ErrorKind::IndexTooLarge);
}
