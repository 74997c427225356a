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
#include "liegeo/theorem_lab.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <map>

using namespace liegeo;
using namespace liegeo::catalog;

namespace {

std::map<std::string, const TheoremReport*> by_id(const HypersurfaceReport& r) {
  std::map<std::string, const TheoremReport*> out;
  for (const auto& t : r.theorems) out[t.theorem_id] = &t;
  return out;
}

const Predicate* find(const std::vector<Predicate>& ps, const std::string& name) {
  for (const auto& p : ps) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("decide: hypotheses gate, first failing conclusion is the witness") {
  const auto pred = [](std::string name, bool holds) {
    Predicate p;
    p.name = std::move(name);
    p.holds = holds;
    return p;
  };
  TheoremReport t;
  t.hypotheses.push_back(pred("h1", true));
  t.conclusions.push_back(pred("c1", true));
  t.conclusions.push_back(pred("c2", false));
  t.conclusions.push_back(pred("c3", false));
  t.decide();
  CHECK(t.verdict == Verdict::Violated);
  REQUIRE(t.witness.has_value());
  CHECK(t.witness->name == "c2");

  t.hypotheses.push_back(pred("h2", false));
  t.decide();
  CHECK(t.verdict == Verdict::Inapplicable);
  CHECK_FALSE(t.witness.has_value());

  t.hypotheses.back().holds = true;
  t.conclusions[1].holds = true;
  t.conclusions[2].holds = true;
  t.decide();
  CHECK(t.verdict == Verdict::Consistent);
  CHECK_FALSE(t.witness.has_value());
  CHECK(std::string(to_string(Verdict::Inapplicable)) == "inapplicable");
  CHECK(std::string(to_string(Evidence::SampledOnly)) == "sampled-only");
}

TEST_CASE("Einstein constants") {
  const EinsteinCheck s = einstein_check(su2());
  CHECK(s.einstein);
  CHECK(s.lambda->to_string() == "1/2");
  CHECK(einstein_check(su2(2)).lambda->to_string() == "1/4");
  CHECK(einstein_check(sl2r()).lambda->to_string() == "-1/4");
  CHECK(einstein_check(euclidean(3)).lambda->to_string() == "0");
  CHECK_FALSE(einstein_check(u2()).einstein);
  CHECK_FALSE(einstein_check(oscillator(2)).einstein);
}

TEST_CASE("algebra reports") {
  const AlgebraReport s = algebra_report(su2());
  CHECK(s.validation.passed());
  CHECK(s.center.size() == 0);
  CHECK(s.semisimplicity.semisimple);
  CHECK_FALSE(s.codim1.has_value());
  CHECK(s.lemma21.verdict == Verdict::Consistent);

  const AlgebraReport u = algebra_report(u2());
  CHECK(u.center.size() == 1);
  CHECK(u.codim1.has_value());
  CHECK(u.lemma21.verdict == Verdict::Consistent);

  CHECK(algebra_report(oscillator(2)).lemma21.verdict == Verdict::Inapplicable);
  CHECK(algebra_report(sl2r()).lemma21.verdict == Verdict::Inapplicable);
  CHECK(algebra_report(euclidean(3)).lemma21.verdict == Verdict::Consistent);
}

TEST_CASE("coordinate plane and Ricci tables") {
  const auto planes = coordinate_plane_table(su2(), true);
  REQUIRE(planes.size() == 3);
  for (const auto& e : planes) {
    CHECK(e.defined);
    CHECK(e.value == "1/4");
    CHECK(e.numeric == doctest::Approx(0.25));
  }
  const auto ric = ricci_table(oscillator(2), true);
  REQUIRE(ric.size() == 6);
  CHECK(ric.back().ricci == "1/2");
  CHECK(ric.back().directional == "-1/2");
  // Null bracket planes are reported as undefined rather than dropped.
  const auto mk = coordinate_plane_table(minkowski(3), false);
  CHECK(mk.size() == 3);
  for (const auto& e : mk) CHECK(e.numeric == 0.0);
}

TEST_CASE("oscillator plane families match their closed forms") {
  const std::vector<Rational> params{Rational(-2), Rational(-1, 2), Rational(0), Rational(1, 3),
                                     Rational(3, 2), Rational(10)};
  for (std::size_t m = 1; m <= 3; ++m) {
    CAPTURE(m);
    for (bool exact : {true, false}) {
      const auto rows = oscillator_families(m, params, exact);
      CHECK(rows.size() >= 3 + 3 * params.size());
      for (const auto& row : rows) {
        CAPTURE(row.label);
        CAPTURE(row.a);
        // At a = 0 the (X_i, Y_i) plane has a nonzero null bracket [X_i, Y_i] = P.
        const bool xy = row.label.size() == 11 && row.label.rfind("K(aV+X", 0) == 0 &&
                        row.label[8] == 'Y' && row.label[6] == row.label[9];
        if (row.a == "0" && xy) {
          CHECK(row.value == "undefined: null bracket");
          CHECK_FALSE(row.matches);
        } else {
          CHECK(row.matches);
        }
      }
    }
  }
  const auto rows = oscillator_families(1, {Rational(1, 3)}, true);
  bool seen = false;
  for (const auto& row : rows) {
    if (row.label.rfind("K(aV+U", 0) == 0) {
      CHECK(row.value == "1/16");  // (1 - 1/3) / (8 (4/3))
      seen = true;
    }
  }
  CHECK(seen);
}

TEST_CASE("Lorentzian plane supremum") {
  const LorentzPlaneReport flat = lorentz_plane_sup(minkowski(4), 500, 1);
  CHECK(flat.sup == 0.0);

  const LorentzPlaneReport a = lorentz_plane_sup(oscillator(2), 2000, 42);
  const LorentzPlaneReport b = lorentz_plane_sup(oscillator(2), 2000, 42);
  CHECK(a.sup == b.sup);
  CHECK(a.argmax_t == b.argmax_t);
  CHECK(a.accepted + a.rejected == 2000);
  CHECK(a.sup <= 1e-9);
  REQUIRE(a.family_sup.has_value());
  CHECK(*a.family_sup <= 0.0);

  // Per-sample streams make the running supremum monotone in the sample count.
  double prev = -INFINITY;
  for (std::size_t n : {10u, 100u, 1000u, 2000u}) {
    const double s = lorentz_plane_sup(oscillator(2), n, 42).sup;
    CHECK(s >= prev);
    prev = s;
  }
  CHECK(lorentz_plane_sup(oscillator(2), 2000, 43).sup != a.sup);

  const LorentzPlaneReport p = lorentz_plane_sup(catalog_algebra("product:factor=su2"), 1000, 7);
  CHECK(p.sup <= 1e-9);
  CHECK_FALSE(p.family_sup.has_value());

  CHECK(test::error_kind([] { lorentz_plane_sup(su2(), 10, 0); }) == ErrorKind::InvalidSignature);
}

TEST_CASE("hypersurface report: compact central cylinder in u2") {
  const ImmersionChart chart = catalog_immersion("su2_in_u2");
  const HypersurfaceReport r = hypersurface_report(chart, 8, 1e-3);
  const auto t = by_id(r);
  CHECK(r.theorems.size() == 7);
  CHECK(t.at("T41")->verdict == Verdict::Consistent);
  CHECK(t.at("T43")->verdict == Verdict::Consistent);
  CHECK(t.at("T42")->verdict == Verdict::Inapplicable);
  CHECK(t.at("T51")->verdict == Verdict::Inapplicable);
  CHECK(r.scan.support.min == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r.scan.shape_norm.max < 1e-8);
  CHECK(r.scan.transversality.transversal);
  const Predicate* nc = find(t.at("T43")->diagnostics, "noncompact");
  REQUIRE(nc != nullptr);
  CHECK(*nc->value == 0.0);
}

TEST_CASE("hypersurface report: spacelike slice of a Lorentzian product") {
  const ImmersionChart chart = catalog_immersion("subgroup_slice:ambient=product:factor=su2");
  const HypersurfaceReport r = hypersurface_report(chart, 8, 1e-3);
  const auto t = by_id(r);
  CHECK(t.at("T51")->verdict == Verdict::Consistent);
  CHECK(t.at("L53")->verdict == Verdict::Consistent);
  CHECK(t.at("T54")->verdict == Verdict::Consistent);
  CHECK(t.at("T41")->verdict == Verdict::Inapplicable);
  const Predicate* c = find(t.at("T54")->diagnostics, "sampled c");
  REQUIRE(c != nullptr);
  CHECK(*c->value == doctest::Approx(1.0));
}

TEST_CASE("hypersurface report: hyperbolic plane fails the bounded Gauss image test") {
  for (const char* id : {"hyperbolic_graph:r=1,ambient=minkowski:n=3",
                         "hyperbolic_graph:r=2,ambient=minkowski:n=3"}) {
    CAPTURE(id);
    const HypersurfaceReport r = hypersurface_report(catalog_immersion(id), 8, 1e-3);
    const TheoremReport* t54 = by_id(r).at("T54");
    CHECK(t54->verdict == Verdict::Inapplicable);
    const Predicate* bounded = find(t54->hypotheses, "bounded Gauss map image");
    REQUIRE(bounded != nullptr);
    CHECK_FALSE(bounded->holds);
    CHECK(r.scan.umbilic_defect.max < 1e-8);
    CHECK(r.scan.homothety.max < 1e-6);
    CHECK(r.scan.ric_normal.max == 0.0);
  }
}

TEST_CASE("every theorem report has a consistent verdict and witness") {
  for (const char* id : {"sphere:r=1,ambient=euclidean:n=3", "graph:ambient=product:factor=su2",
                         "affine_subspace:ambient=euclidean:n=3",
                         "affine_subspace:ambient=minkowski:n=3", "subgroup_slice:ambient=u2"}) {
    CAPTURE(id);
    const HypersurfaceReport r = hypersurface_report(catalog_immersion(id), 6, 1e-3);
    for (const auto& t : r.theorems) {
      CAPTURE(t.theorem_id);
      CHECK(t.witness.has_value() == (t.verdict == Verdict::Violated));
      TheoremReport copy = t;
      copy.decide();
      CHECK(copy.verdict == t.verdict);
    }
  }
}

TEST_CASE("hypersurface report direction handling") {
  const ImmersionChart chart = catalog_immersion("sphere:r=1,ambient=euclidean:n=3");
  CHECK(test::error_kind([&] { hypersurface_report(chart, 6, 1e-3, Vec::Zero(2)); }) ==
        ErrorKind::DimensionMismatch);
  CHECK(test::error_kind([&] { hypersurface_report(chart, 6, 0.5); }) ==
        ErrorKind::DomainViolation);
}
