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
#include "liegeo/surface_checks.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <set>

using namespace liegeo;
using liegeo::catalog::catalog_immersion;

TEST_CASE("grid nodes, end points and interior traversal") {
  Vec lo(2), hi(2);
  lo << -1.0, 0.0;
  hi << 1.0, 4.0;
  const Grid g(ParamBox{lo, hi}, 5);
  CHECK(g.node_count() == 25);
  CHECK(g.spacing() == doctest::Approx(0.5));
  CHECK(g.node({0, 0}) == lo);
  CHECK(g.node({4, 4}) == hi);
  CHECK(g.node({2, 1})[0] == doctest::Approx(0.0));
  CHECK(g.node({2, 1})[1] == doctest::Approx(1.0));

  std::size_t all = 0, interior = 0;
  g.for_each(false, [&](const Vec& u) {
    ++all;
    CHECK(ParamBox{lo, hi}.contains(u));
  });
  g.for_each(true, [&](const Vec&) { ++interior; });
  CHECK(all == 25);
  CHECK(interior == 9);

  const Grid s = g.shrunk(0.5);
  CHECK(s.per_axis() == 5);
  CHECK(s.box().lo[0] == doctest::Approx(-0.5));
  CHECK(s.box().hi[1] == doctest::Approx(3.0));
  CHECK(test::error_kind([&] { Grid(ParamBox{lo, hi}, 1); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("residual statistics") {
  ResidualStats s;
  CHECK(s.empty());
  CHECK(s.mean() == 0.0);
  for (double v : {3.0, -1.0, 2.0, 4.0}) s.add(v, Vec::Constant(1, v));
  CHECK(s.count == 4);
  CHECK(s.max == 4.0);
  CHECK(s.min == -1.0);
  CHECK(s.argmax[0] == 4.0);
  CHECK(s.argmin[0] == -1.0);
  CHECK(s.mean() == doctest::Approx(2.0));
  CHECK(s.stddev() == doctest::Approx(std::sqrt(3.5)));
}

TEST_CASE("roundoff floor scales with the derivative order") {
  const double eps = std::numeric_limits<double>::epsilon();
  CHECK(roundoff_floor(1e-3, 1) == doctest::Approx(64 * eps * 1e3));
  CHECK(roundoff_floor(1e-3, 2) == doctest::Approx(64 * eps * 1e6));
  CHECK(roundoff_floor(5e-4, 2) > roundoff_floor(1e-3, 2));
}

TEST_CASE("verify_surface on the unit sphere") {
  const ImmersionChart s = catalog_immersion("sphere:r=1,ambient=euclidean:n=3");
  SurfaceVerifyConfig cfg;
  cfg.grid = 8;
  const SurfaceReport r = verify_surface(s, cfg);
  CHECK(r.passed());
  CHECK(r.grid == 8);
  CHECK(r.checks.size() == surface_check_ids().size());
  const CheckSummary* lap = r.find("laplacian");
  REQUIRE(lap != nullptr);
  CHECK(lap->status == CheckStatus::Pass);
  CHECK(lap->stats.count == 36);
  REQUIRE(lap->half.has_value());
  if (lap->ratio_applicable) {
    CHECK(*lap->convergence_ratio >= 3.5);
    CHECK(*lap->convergence_ratio <= 4.5);
  }
  CHECK(r.find("lemma31")->stats.max < 1e-12);
  CHECK(r.find("nullity")->stats.max == 0.0);
  CHECK(r.find("threshold")->status == CheckStatus::Inapplicable);
  CHECK(r.find("jacobi")->status == CheckStatus::Pass);
  CHECK(r.find("duality_raw")->status == CheckStatus::Pass);
}

TEST_CASE("verify_surface check selection and aliases") {
  const ImmersionChart s = catalog_immersion("hyperbolic_graph:r=1,ambient=minkowski:n=3");
  SurfaceVerifyConfig cfg;
  cfg.grid = 6;
  cfg.checks = {"lemma35", "umbilicity"};
  cfg.convergence = false;
  const SurfaceReport r = verify_surface(s, cfg);
  std::set<std::string> ids;
  for (const auto& c : r.checks) ids.insert(c.id);
  CHECK(ids == std::set<std::string>{"laplacian", "umbilicity_defect", "umbilicity_gap"});
  CHECK_FALSE(r.find("laplacian")->half.has_value());
  CHECK(r.passed());

  cfg.checks = {"lemma99"};
  CHECK(test::error_kind([&] { verify_surface(s, cfg); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("verify_surface argument validation") {
  const ImmersionChart s = catalog_immersion("sphere:r=1,ambient=euclidean:n=3");
  SurfaceVerifyConfig cfg;
  cfg.grid = 3;
  CHECK(test::error_kind([&] { verify_surface(s, cfg); }) == ErrorKind::InvalidParameter);
  cfg.grid = 8;
  cfg.h = 0;
  CHECK(test::error_kind([&] { verify_surface(s, cfg); }) == ErrorKind::InvalidParameter);
  cfg.h = 0.5;  // spacing is well below 2h
  CHECK(test::error_kind([&] { verify_surface(s, cfg); }) == ErrorKind::DomainViolation);
}

TEST_CASE("verify_surface reports the raw duality failure on a curved graph") {
  const ImmersionChart g = catalog_immersion("graph:ambient=product:factor=su2");
  SurfaceVerifyConfig cfg;
  cfg.grid = 6;
  cfg.checks = {"duality"};
  const SurfaceReport r = verify_surface(g, cfg);
  CHECK(r.find("duality_raw")->status == CheckStatus::Fail);
  CHECK(r.find("duality_corrected")->status == CheckStatus::Pass);
  CHECK_FALSE(r.passed());
}

TEST_CASE("transversality scan") {
  const ImmersionChart s = catalog_immersion("sphere:r=1,ambient=euclidean:n=3");
  const Grid g(s.domain(), 12);
  Vec e3 = Vec::Zero(3);
  e3[2] = 1;
  const TransversalityReport t = transversality_scan(s, e3, g);
  CHECK(t.sampled_only);
  CHECK(t.min_value < 0);
  CHECK(t.max_value > 0);
  CHECK(t.sign_changes > 0);
  CHECK_FALSE(t.transversal);

  const ImmersionChart c = catalog_immersion("su2_in_u2");
  const TransversalityReport tc =
      transversality_scan(c, *c.info().reference, Grid(c.domain(), 6));
  CHECK(tc.transversal);
  CHECK(tc.sign_changes == 0);
  CHECK(tc.min_abs == doctest::Approx(1.0).epsilon(1e-10));
}
