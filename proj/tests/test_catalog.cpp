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

#include <cmath>

using namespace liegeo;
using namespace liegeo::catalog;

TEST_CASE("catalog id grammar") {
  const CatalogId id = CatalogId::parse("sphere:r=1.5,ambient=euclidean:n=3");
  CHECK(id.name == "sphere");
  CHECK(id.params.at("r") == "1.5");
  CHECK(id.params.at("ambient") == "euclidean:n=3");
  CHECK(id.to_string() == "sphere:r=1.5,ambient=euclidean:n=3");
  CHECK(id.real("r", 0) == 1.5);
  CHECK(id.rational("r", 0) == Rational(3, 2));
  CHECK(CatalogId::parse("su2").params.empty());
  CHECK(test::error_kind([] { CatalogId::parse("oscillator:m=1,m=2"); }) ==
        ErrorKind::InvalidParameter);
  CHECK(test::error_kind([] { CatalogId::parse("oscillator:=2"); }) == ErrorKind::InvalidParameter);
  CHECK(test::error_kind([] { catalog_algebra("oscillator:q=2"); }) == ErrorKind::InvalidParameter);
  CHECK(test::error_kind([] { catalog_algebra("oscillator:m=0"); }) == ErrorKind::InvalidParameter);
  CHECK(test::error_kind([] { catalog_algebra("nope"); }) == ErrorKind::UnknownCatalogEntry);
  CHECK(test::error_kind([] { catalog_immersion("nope"); }) == ErrorKind::UnknownCatalogEntry);
}

TEST_CASE("catalog algebra shapes") {
  CHECK(catalog_algebra("euclidean:n=3").is_abelian());
  CHECK(catalog_algebra("euclidean:n=3").signature().index() == 0);
  const auto sl2 = sl2r();
  CHECK(sl2.signature().lorentzian());
  CHECK(sl2.signature().values() == std::vector<int>{1, 1, -1});
  const auto osc = oscillator(1);
  CHECK(osc.dim() == 4);
  CHECK(osc.labels() == std::vector<std::string>{"U", "X1", "Y1", "V"});
  CHECK(osc.signature().values() == std::vector<int>{1, 1, 1, -1});
  CHECK(oscillator(3).dim() == 8);
  const auto prod = catalog_algebra("product:factor=su2");
  CHECK(prod.dim() == 4);
  CHECK(prod.signature().lorentzian());
  CHECK(prod.signature().timelike_position() == 3);
  const SubspaceBasis z = center(prod);
  REQUIRE(z.size() == 1);
  CHECK(z.vectors[0] == prod.basis_vector<ExactScalar>(3));
}

TEST_CASE("oscillator brackets in the P, Q picture") {
  // [X1, Y1] = P, [Q, X1] = Y1, [Q, Y1] = -X1.
  const auto osc = oscillator(1);
  const auto x = osc.basis_vector<ExactScalar>(1);
  const auto y = osc.basis_vector<ExactScalar>(2);
  const auto p = oscillator_p(1);
  const auto qv = oscillator_q(1);
  CHECK(bracket(osc, x, y) == p);
  CHECK(bracket(osc, qv, x) == y);
  auto minus_x = x;
  for (auto& c : minus_x) c = -c;
  CHECK(bracket(osc, qv, y) == minus_x);
  CHECK(inner<ExactScalar>(osc, p, qv) == ExactScalar(1));
  CHECK(inner<ExactScalar>(osc, p, p).is_zero());
  CHECK(inner<ExactScalar>(osc, qv, qv).is_zero());
}

TEST_CASE("catalog list is consistent") {
  for (const auto& e : catalog_list()) {
    CAPTURE(e.name);
    if (e.kind == "algebra") {
      CHECK(is_algebra_name(e.name));
      CHECK(validate(catalog_algebra(e.example), true).passed());
    } else {
      CHECK(is_immersion_name(e.name));
      const ImmersionChart chart = catalog_immersion(e.example);
      CHECK(chart.dim() + 1 == chart.ambient().dim());
    }
  }
}

TEST_CASE("immersion fixtures have full-rank frames and unit normals") {
  const std::vector<std::string> ids{
      "sphere:r=1,ambient=euclidean:n=3",
      "sphere:r=2,orient=in,ambient=euclidean:n=3",
      "hyperbolic_graph:r=1,ambient=minkowski:n=3",
      "hyperbolic_graph:r=2,perturb=0.1,ambient=minkowski:n=3",
      "graph:ambient=euclidean:n=3",
      "graph:ambient=minkowski:n=3",
      "graph:ambient=product:factor=su2",
      "subgroup_slice:ambient=product:factor=su2",
      "subgroup_slice:ambient=product:factor=u2",
      "subgroup_slice:ambient=u2",
      "su2_in_u2",
      "affine_subspace:ambient=euclidean:n=4",
      "affine_subspace:ambient=minkowski:n=3"};
  for (const auto& id : ids) {
    CAPTURE(id);
    const ImmersionChart chart = catalog_immersion(id);
    const ParamBox& box = chart.domain();
    for (int s = 0; s <= 4; ++s) {
      const Vec u = box.lo + (box.hi - box.lo) * (0.1 + 0.2 * s);
      const Mat t = chart.frame(u);
      Eigen::JacobiSVD<Mat> svd(t);
      CHECK(svd.singularValues().minCoeff() > 1e-6);
      const Vec eta = chart.normal(u);
      CHECK(std::abs(std::abs(chart.ops().inner(eta, eta)) - 1.0) < 1e-12);
      for (Eigen::Index k = 0; k < t.cols(); ++k) {
        CHECK(std::abs(chart.ops().inner(eta, t.col(k))) < 1e-12);
      }
      CHECK(chart.maurer_cartan_defect(u, 1e-4) < 1e-6);
    }
  }
}

TEST_CASE("slice fixtures carry the expected normals") {
  const ImmersionChart slice = catalog_immersion("subgroup_slice:ambient=product:factor=su2");
  const Vec eta = slice.normal(slice.domain().center());
  CHECK(std::abs(eta[3] - 1.0) < 1e-15);
  CHECK(eta.head(3).norm() < 1e-15);
  // f_X = <eta, d_t> = -1 in the Lorentzian convention.
  CHECK(slice.ops().inner(eta, *slice.info().reference) == doctest::Approx(-1.0));

  const ImmersionChart s = catalog_immersion("su2_in_u2");
  CHECK(s.info().compact);
  CHECK(s.ops().inner(s.normal(s.domain().center()), *s.info().reference) ==
        doctest::Approx(1.0));
}

TEST_CASE("degenerate lateral classes are reported") {
  // The codimension-one ideal span{P, X1, Y1} has the null normal P.
  CHECK(test::error_kind([] { catalog_immersion("subgroup_slice:ambient=oscillator:m=1"); }) ==
        ErrorKind::DegenerateInducedMetric);
  CHECK(test::error_kind([] { catalog_immersion("subgroup_slice:ambient=sl2r"); }) ==
        ErrorKind::InvalidParameter);
  CHECK(test::error_kind([] { catalog_immersion("sphere:r=1,ambient=minkowski:n=3"); }) ==
        ErrorKind::InvalidParameter);
  CHECK(test::error_kind([] { catalog_immersion("sphere:r=-1,ambient=euclidean:n=3"); }) ==
        ErrorKind::InvalidParameter);
}

TEST_CASE("frames outside the box are rejected") {
  const ImmersionChart chart = catalog_immersion("sphere:r=1,ambient=euclidean:n=3");
  Vec u = chart.domain().hi;
  u[0] += 0.1;
  CHECK(test::error_kind([&] { chart.frame(u); }) == ErrorKind::DomainViolation);
}
