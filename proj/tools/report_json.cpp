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

#include "report_json.hpp"

#include <cmath>

namespace liegeo::cli {

json to_json(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

json to_json(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_json(v[i]));
  return a;
}

json to_json(const ExactVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

json to_json(const CheckReport& r) {
  json checks = json::array();
  for (const auto& e : r.entries) {
    checks.push_back({{"name", e.name},
                      {"passed", e.passed},
                      {"residual", e.residual},
                      {"location", e.location},
                      {"violations", e.violations}});
  }
  return {{"subject", r.subject},
          {"exact", r.exact},
          {"tolerance", r.exact ? json(nullptr) : to_json(r.tolerance)},
          {"passed", r.passed()},
          {"checks", std::move(checks)}};
}

json to_json(const ResidualStats& s) {
  if (s.empty()) return {{"count", 0}};
  return {{"count", s.count},   {"min", to_json(s.min)},         {"max", to_json(s.max)},
          {"mean", to_json(s.mean())}, {"argmax", to_json(s.argmax)}, {"argmin", to_json(s.argmin)}};
}

json to_json(const CheckSummary& c) {
  json j = to_json(c.stats);
  j["status"] = to_string(c.status);
  j["tolerance"] = to_json(c.tolerance);
  if (c.half) j["half_step"] = to_json(*c.half);
  j["convergence_ratio"] = c.convergence_ratio ? to_json(*c.convergence_ratio) : json(nullptr);
  j["ratio_applicable"] = c.ratio_applicable;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

json to_json(const SurfaceReport& r) {
  json per_check = json::object();
  json verdicts = json::object();
  for (const auto& c : r.checks) {
    per_check[c.id] = to_json(c);
    verdicts[c.id] = to_string(c.status);
  }
  return {{"fixture", r.fixture},     {"algebra", r.algebra},   {"grid", r.grid},
          {"h", to_json(r.h)},        {"per_check", per_check}, {"verdicts", verdicts},
          {"passed", r.passed()}};
}

json to_json(const Predicate& p) {
  json j = {{"name", p.name}, {"evidence", to_string(p.evidence)}, {"holds", p.holds}};
  if (p.value) j["value"] = to_json(*p.value);
  if (p.tolerance) j["tolerance"] = to_json(*p.tolerance);
  if (p.location) j["location"] = to_json(*p.location);
  if (!p.detail.empty()) j["detail"] = p.detail;
  return j;
}

namespace {

json predicates(const std::vector<Predicate>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(to_json(p));
  return a;
}

json basis(const SubspaceBasis& b) {
  json a = json::array();
  for (const auto& v : b.vectors) a.push_back(to_json(v));
  return a;
}

}  // namespace

json to_json(const TheoremReport& t) {
  json j = {{"theorem_id", t.theorem_id},
            {"subject", t.subject},
            {"verdict", to_string(t.verdict)},
            {"hypotheses_checked", predicates(t.hypotheses)},
            {"conclusions_checked", predicates(t.conclusions)}};
  if (!t.diagnostics.empty()) j["diagnostics"] = predicates(t.diagnostics);
  j["witness"] = t.witness ? to_json(*t.witness) : json(nullptr);
  return j;
}

json to_json(const AlgebraReport& r) {
  json ss = {{"semisimple", r.semisimplicity.semisimple},
             {"killing_determinant", r.semisimplicity.determinant.to_string()}};
  if (r.semisimplicity.null_vector) ss["null_vector"] = to_json(*r.semisimplicity.null_vector);
  json codim1 = nullptr;
  if (r.codim1) {
    codim1 = {{"construction", r.codim1->construction}, {"basis", basis(r.codim1->basis)}};
    if (r.codim1->central_normal) codim1["central_normal"] = to_json(*r.codim1->central_normal);
  }
  json einstein = {{"einstein", r.einstein.einstein}};
  einstein["lambda"] = r.einstein.lambda ? json(r.einstein.lambda->to_string()) : json(nullptr);
  return {{"algebra", r.algebra},
          {"validation", to_json(r.validation)},
          {"center", {{"dim", r.center.size()}, {"basis", basis(r.center)}}},
          {"semisimplicity", std::move(ss)},
          {"codim1_subalgebra", std::move(codim1)},
          {"einstein", std::move(einstein)},
          {"theorems", json::array({to_json(r.lemma21)})}};
}

json to_json(const LorentzPlaneReport& r) {
  json j = {{"samples", r.samples},   {"accepted", r.accepted},
            {"rejected", r.rejected}, {"seed", r.seed},
            {"sup", to_json(r.sup)},  {"argmax_t", to_json(r.argmax_t)},
            {"argmax_w", to_json(r.argmax_w)}};
  if (r.family_sup) j["closed_form_family_sup"] = to_json(*r.family_sup);
  return j;
}

json to_json(const TransversalityReport& r) {
  return {{"min_abs", to_json(r.min_abs)},     {"min_value", to_json(r.min_value)},
          {"max_value", to_json(r.max_value)}, {"sign_changes", r.sign_changes},
          {"transversal", r.transversal},      {"evidence", r.sampled_only ? "sampled" : "exact"}};
}

json to_json(const HypersurfaceScan& s) {
  json j = {{"nodes", s.nodes},
            {"mean_curvature", to_json(s.mean_curvature)},
            {"shape_norm", to_json(s.shape_norm)},
            {"ric_normal", to_json(s.ric_normal)},
            {"support", to_json(s.support)},
            {"support_stddev", to_json(s.support.stddev())},
            {"nullity", to_json(s.nullity)},
            {"great_sphere_fraction", to_json(s.great_sphere_fraction)},
            {"transversality", to_json(s.transversality)},
            {"transversality_half_grid", to_json(s.transversality_half)}};
  const auto opt = [&j](const char* key, const ResidualStats& st) {
    if (!st.empty()) j[key] = to_json(st);
  };
  opt("pi_norm", s.pi_norm);
  opt("jacobi", s.jacobi);
  opt("gradient_slack", s.gradient_slack);
  opt("threshold", s.threshold);
  opt("umbilicity_defect", s.umbilic_defect);
  opt("umbilicity_gap", s.umbilic_gap);
  opt("homothety", s.homothety);
  opt("homothety_factor", s.homothety_factor);
  if (!s.homothety_note.empty()) j["homothety_note"] = s.homothety_note;
  return j;
}

json to_json(const HypersurfaceReport& r) {
  json theorems = json::array();
  for (const auto& t : r.theorems) theorems.push_back(to_json(t));
  return {{"fixture", r.fixture},
          {"algebra", r.algebra},
          {"grid", r.grid},
          {"h", to_json(r.h)},
          {"direction", to_json(r.direction)},
          {"direction_label", r.direction_label},
          {"scan", to_json(r.scan)},
          {"theorems", std::move(theorems)}};
}

json to_json(const std::vector<CurvatureEntry>& table) {
  json a = json::array();
  for (const auto& e : table) {
    a.push_back({{"plane", e.label}, {"value", e.value}, {"defined", e.defined}});
  }
  return a;
}

json to_json(const std::vector<RicciEntry>& table) {
  json a = json::array();
  for (const auto& e : table) {
    a.push_back({{"direction", e.label}, {"ricci", e.ricci}, {"directional", e.directional}});
  }
  return a;
}

json to_json(const std::vector<FamilyEntry>& table) {
  json a = json::array();
  for (const auto& e : table) {
    a.push_back({{"plane", e.label},
                 {"a", e.a},
                 {"value", e.value},
                 {"closed_form", e.closed_form},
                 {"matches", e.matches}});
  }
  return a;
}

}  // namespace liegeo::cli
