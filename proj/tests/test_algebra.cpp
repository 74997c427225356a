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

#include "liegeo/algebra.hpp"
#include "liegeo/catalog.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace liegeo;
using liegeo::catalog::catalog_algebra;

namespace {

ExactScalar q(std::int64_t p, std::int64_t r = 1) { return ExactScalar::fraction(p, r); }

ExactVector e(const MetricLieAlgebra& alg, std::size_t i) { return alg.basis_vector<ExactScalar>(i); }

ExactVector scaled(ExactVector v, const ExactScalar& s) {
  for (auto& x : v) x *= s;
  return v;
}

}  // namespace

TEST_CASE("signature") {
  CHECK(Signature({1, 1, -1}).lorentzian());
  CHECK(Signature({1, 1, -1}).timelike_position() == 2);
  CHECK(test::error_kind([] { Signature({1, -1, -1}); }) == ErrorKind::IndexTooLarge);
  CHECK(test::error_kind([] { Signature({1, 0}); }) == ErrorKind::InvalidSignature);
  CHECK(test::error_kind([] { Signature(std::vector<int>{}); }) == ErrorKind::InvalidSignature);
}

TEST_CASE("su2 oracle values") {
  const MetricLieAlgebra su2 = catalog::su2();
  const auto b = killing_matrix<ExactScalar>(su2);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(b(i, j) == q(i == j ? -2 : 0));
  }
  CHECK(ricci(su2, e(su2, 0), e(su2, 0)) == q(1, 2));
  CHECK(ricci_contraction(su2, e(su2, 0), e(su2, 0)) == q(1, 2));
  CHECK(levi_civita(su2, e(su2, 0), e(su2, 1)) == scaled(e(su2, 2), q(1, 2)));
  CHECK(curvature_tensor(su2, e(su2, 0), e(su2, 1), e(su2, 1)) == scaled(e(su2, 0), q(1, 4)));
  CHECK(sectional_curvature(su2, e(su2, 0), e(su2, 1)).value == q(1, 4));
}

TEST_CASE("su2 has constant curvature 1/4 on random planes") {
  const MetricLieAlgebra su2 = catalog::su2();
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 100; ++i) {
    // Orthonormal pair by Gram-Schmidt.
    FloatVector x = test::random_vector(rng, 3);
    FloatVector y = test::random_vector(rng, 3);
    const double nx = std::sqrt(inner<double>(su2, x, x));
    for (auto& c : x) c /= nx;
    const double xy = inner<double>(su2, x, y);
    for (std::size_t k = 0; k < 3; ++k) y[k] -= xy * x[k];
    const double ny = std::sqrt(inner<double>(su2, y, y));
    for (auto& c : y) c /= ny;
    const auto k = sectional_curvature<double>(su2, x, y);
    REQUIRE(k.defined);
    CHECK(std::abs(k.value - 0.25) < 1e-12);
  }
  for (int i = 0; i < 100; ++i) {
    const ExactVector x = test::random_int_vector(rng, 3);
    const ExactVector y = test::random_int_vector(rng, 3);
    const ExactScalar g = inner<ExactScalar>(su2, x, x) * inner<ExactScalar>(su2, y, y) -
                          inner<ExactScalar>(su2, x, y) * inner<ExactScalar>(su2, x, y);
    if (g.is_zero()) continue;
    CHECK(sectional_curvature(su2, x, y).value == q(1, 4));
  }
}

TEST_CASE("Ricci via the Killing form equals the curvature contraction") {
  std::mt19937_64 rng(11);
  for (const auto& id : test::catalog_algebra_ids()) {
    CAPTURE(id);
    const MetricLieAlgebra alg = catalog_algebra(id);
    for (int i = 0; i < 200; ++i) {
      const ExactVector v = test::random_int_vector(rng, alg.dim());
      const ExactVector w = test::random_int_vector(rng, alg.dim());
      CHECK(ricci(alg, v, w) == ricci_contraction(alg, v, w));
      const FloatVector fv = test::random_vector(rng, alg.dim());
      const FloatVector fw = test::random_vector(rng, alg.dim());
      CHECK(std::abs(ricci<double>(alg, fv, fw) - ricci_contraction<double>(alg, fv, fw)) <= 1e-12);
    }
  }
}

TEST_CASE("sectional curvature agrees with the curvature tensor") {
  std::mt19937_64 rng(5);
  for (const auto& id : test::catalog_algebra_ids()) {
    CAPTURE(id);
    const MetricLieAlgebra alg = catalog_algebra(id);
    for (int i = 0; i < 50; ++i) {
      const ExactVector x = test::random_int_vector(rng, alg.dim());
      const ExactVector y = test::random_int_vector(rng, alg.dim());
      const ExactScalar xx = inner<ExactScalar>(alg, x, x);
      const ExactScalar g = xx * inner<ExactScalar>(alg, y, y) -
                            inner<ExactScalar>(alg, x, y) * inner<ExactScalar>(alg, x, y);
      if (g.is_zero()) continue;
      const auto k = sectional_curvature(alg, x, y);
      if (!k.defined) continue;
      CHECK(k.value == sectional_curvature_from_tensor(alg, x, y));
    }
  }
}

TEST_CASE("curvature tensor symmetries") {
  std::mt19937_64 rng(9);
  const MetricLieAlgebra alg = catalog_algebra("oscillator:m=2");
  for (int i = 0; i < 30; ++i) {
    const auto x = test::random_int_vector(rng, alg.dim(), 2);
    const auto y = test::random_int_vector(rng, alg.dim(), 2);
    const auto z = test::random_int_vector(rng, alg.dim(), 2);
    const auto w = test::random_int_vector(rng, alg.dim(), 2);
    const ExactScalar rxyzw = inner<ExactScalar>(alg, curvature_tensor(alg, x, y, z), w);
    CHECK(rxyzw == -inner<ExactScalar>(alg, curvature_tensor(alg, y, x, z), w));
    CHECK(rxyzw == -inner<ExactScalar>(alg, curvature_tensor(alg, x, y, w), z));
    CHECK(rxyzw == inner<ExactScalar>(alg, curvature_tensor(alg, z, w, x), y));
    // First Bianchi identity.
    ExactVector s = curvature_tensor(alg, x, y, z);
    const auto b = curvature_tensor(alg, y, z, x);
    const auto c = curvature_tensor(alg, z, x, y);
    for (std::size_t k = 0; k < s.size(); ++k) s[k] += b[k] + c[k];
    CHECK(detail::is_zero_vector<ExactScalar>(s));
  }
}

TEST_CASE("oscillator Ricci in the V direction") {
  for (std::size_t m = 1; m <= 3; ++m) {
    const MetricLieAlgebra alg = catalog::oscillator(m);
    const std::size_t v = alg.dim() - 1;
    REQUIRE(alg.labels()[v] == "V");
    const ExactVector ev = e(alg, v);
    CHECK(ricci(alg, ev, ev) == q(static_cast<std::int64_t>(m), 4));
    CHECK(ricci_directional(alg, ev) == q(-static_cast<std::int64_t>(m), 4));
    CHECK(ricci_contraction(alg, ev, ev) == q(static_cast<std::int64_t>(m), 4));
  }
}

TEST_CASE("sl2r is Einstein with Ric = -1/4 g") {
  const MetricLieAlgebra alg = catalog::sl2r();
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(ricci_directional(alg, e(alg, i)) == q(-1, 4));
  }
}

TEST_CASE("degenerate planes and null brackets") {
  const MetricLieAlgebra su2 = catalog::su2();
  CHECK(test::error_kind([&] { sectional_curvature(su2, e(su2, 0), scaled(e(su2, 0), q(3))); }) ==
        ErrorKind::DegeneratePlane);
  const MetricLieAlgebra osc = catalog::oscillator(1);
  // [X1, Y1] = P is null.
  const auto k = sectional_curvature(osc, e(osc, 1), e(osc, 2));
  CHECK_FALSE(k.defined);
  CHECK(test::error_kind([&] {
          ricci_directional(osc, catalog::oscillator_p(1));
        }) == ErrorKind::DegenerateVector);
}

TEST_CASE("abelian algebras are flat") {
  const MetricLieAlgebra mk = catalog::minkowski(4);
  CHECK(mk.is_abelian());
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto x = test::random_int_vector(rng, 4);
    const auto y = test::random_int_vector(rng, 4);
    CHECK(detail::is_zero_vector<ExactScalar>(curvature_tensor(mk, x, y, y)));
  }
}
