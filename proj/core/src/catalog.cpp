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

#include <algorithm>
#include <charconv>
#include <cstdlib>

namespace liegeo::catalog {

namespace {

[[noreturn]] void bad_param(const std::string& what) {
  throw GeometryError(ErrorKind::InvalidParameter, what);
}

std::size_t positive_size(const CatalogId& id, const std::string& key, long fallback) {
  const long v = id.integer(key, fallback);
  if (v < 1) bad_param(id.name + ": parameter " + key + " must be >= 1");
  return static_cast<std::size_t>(v);
}

}  // namespace

// --- CatalogId ---------------------------------------------------------------

CatalogId CatalogId::parse(std::string_view text) {
  CatalogId id;
  const std::size_t colon = text.find(':');
  id.name = std::string(text.substr(0, colon));
  if (id.name.empty()) bad_param("catalog id: empty name");
  if (colon == std::string_view::npos) return id;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const std::size_t eq = rest.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      bad_param("catalog id: expected key=value in '" + std::string(text) + "'");
    }
    std::string key(rest.substr(0, eq));
    std::string_view after = rest.substr(eq + 1);
    std::string value;
    if (key == "ambient") {
      value = std::string(after);
      rest = {};
    } else {
      const std::size_t comma = after.find(',');
      value = std::string(after.substr(0, comma));
      rest = comma == std::string_view::npos ? std::string_view{} : after.substr(comma + 1);
    }
    if (value.empty()) bad_param("catalog id: empty value for " + key);
    if (!id.params.emplace(key, value).second) bad_param("catalog id: duplicate key " + key);
  }
  return id;
}

std::string CatalogId::to_string() const {
  std::string out = name;
  bool first = true;
  for (const auto& [k, v] : params) {
    if (k == "ambient") continue;
    out += first ? ":" : ",";
    out += k + "=" + v;
    first = false;
  }
  if (auto it = params.find("ambient"); it != params.end()) {
    out += first ? ":" : ",";
    out += "ambient=" + it->second;
  }
  return out;
}

Rational CatalogId::rational(const std::string& key, const Rational& fallback) const {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  const std::string& s = it->second;
  // Accept "p", "p/q" and finite decimals such as "1.5" or "-0.25".
  if (auto exact = ExactScalar::parse(s); exact && exact->is_rational()) {
    return exact->rational_part();
  }
  const std::size_t dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t frac = s.size() - dot - 1;
    if (auto whole = ExactScalar::parse(digits); whole && whole->is_rational() && frac < 18) {
      Rational scale = 1;
      for (std::size_t i = 0; i < frac; ++i) scale *= 10;
      return whole->rational_part() / scale;
    }
  }
  bad_param(name + ": parameter " + key + "='" + s + "' is not a rational number");
}

double CatalogId::real(const std::string& key, double fallback) const {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  const std::string& s = it->second;
  double v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec == std::errc() && res.ptr == s.data() + s.size()) return v;
  if (auto exact = ExactScalar::parse(s)) return exact->to_double();
  bad_param(name + ": parameter " + key + "='" + s + "' is not a number");
}

long CatalogId::integer(const std::string& key, long fallback) const {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  const std::string& s = it->second;
  long v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    bad_param(name + ": parameter " + key + "='" + s + "' is not an integer");
  }
  return v;
}

std::string CatalogId::text(const std::string& key, const std::string& fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void CatalogId::restrict_to(std::initializer_list<std::string_view> allowed) const {
  for (const auto& [k, v] : params) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
      bad_param(name + ": unknown parameter '" + k + "'");
    }
  }
}

// --- algebras ----------------------------------------------------------------

MetricLieAlgebra euclidean(std::size_t n) {
  if (n < 1) bad_param("euclidean: n must be >= 1");
  return MetricLieAlgebra("euclidean(" + std::to_string(n) + ")", Signature(std::vector<int>(n, 1)),
                          StructureTensor(n));
}

MetricLieAlgebra minkowski(std::size_t n) {
  if (n < 2) bad_param("minkowski: n must be >= 2");
  std::vector<int> eps(n, 1);
  eps.back() = -1;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i + 1 < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  labels.push_back("T");
  return MetricLieAlgebra("minkowski(" + std::to_string(n) + ")", Signature(eps), StructureTensor(n),
                          labels);
}

namespace {

StructureTensor su2_tensor(std::size_t dim, const ExactScalar& c) {
  StructureTensor t(dim);
  t.set_bracket(0, 1, 2, c);
  t.set_bracket(1, 2, 0, c);
  t.set_bracket(2, 0, 1, c);
  return t;
}

ExactScalar su2_constant(const Rational& scale) {
  if (scale <= 0) bad_param("su2: scale must be positive");
  auto root = ExactScalar(scale).sqrt();
  if (!root) bad_param("su2: sqrt(scale) is not representable in Q(sqrt2)");
  return ExactScalar(1) / *root;
}

std::string scale_suffix(const Rational& scale) {
  return scale == 1 ? "" : ",scale=" + ExactScalar(scale).to_string();
}

}  // namespace

MetricLieAlgebra su2(const Rational& scale) {
  return MetricLieAlgebra("su2" + std::string(scale == 1 ? "" : "(" + scale_suffix(scale).substr(1) + ")"),
                          Signature({1, 1, 1}), su2_tensor(3, su2_constant(scale)),
                          {"e1", "e2", "e3"});
}

MetricLieAlgebra u2(const Rational& scale) {
  return MetricLieAlgebra("u2" + std::string(scale == 1 ? "" : "(" + scale_suffix(scale).substr(1) + ")"),
                          Signature({1, 1, 1, 1}), su2_tensor(4, su2_constant(scale)),
                          {"e1", "e2", "e3", "z"});
}

MetricLieAlgebra sl2r() {
  // Basis (H, E, F): [H,E] = 2E, [H,F] = -2F, [E,F] = H.
  StructureTensor c(3);
  c.set_bracket(0, 1, 1, 2);
  c.set_bracket(0, 2, 2, -2);
  c.set_bracket(1, 2, 0, 1);
  const MetricLieAlgebra raw("sl2r-raw", Signature({1, 1, 1}), c);
  const auto killing = killing_matrix<ExactScalar>(raw);
  return orthonormalize(killing, c, "sl2r", {"h", "s", "t"}).algebra;
}

MetricLieAlgebra oscillator(std::size_t m) {
  if (m < 1) bad_param("oscillator: m must be >= 1");
  // Basis (P, X_1..X_m, Y_1..Y_m, Q).
  const std::size_t n = 2 * m + 2;
  const std::size_t p = 0;
  const std::size_t q = n - 1;
  StructureTensor c(n);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t x = 1 + i;
    const std::size_t y = 1 + m + i;
    c.set_bracket(x, y, p, 1);
    c.set_bracket(q, x, y, 1);
    c.set_bracket(q, y, x, -1);
  }
  exact::ExactMatrix gram(n, n);
  gram(p, q) = 1;
  gram(q, p) = 1;
  for (std::size_t i = 1; i + 1 < n; ++i) gram(i, i) = 1;
  std::vector<std::string> labels{"U"};
  for (std::size_t i = 0; i < m; ++i) labels.push_back("X" + std::to_string(i + 1));
  for (std::size_t i = 0; i < m; ++i) labels.push_back("Y" + std::to_string(i + 1));
  labels.push_back("V");
  return orthonormalize(gram, c, "oscillator(" + std::to_string(m) + ")", labels).algebra;
}

ExactVector oscillator_p(std::size_t m) {
  // P = (U + V)/sqrt2 in the (U, X, Y, V) basis.
  ExactVector v(2 * m + 2, ExactScalar(0));
  const ExactScalar h = ExactScalar(1) / ExactScalar::sqrt2();
  v.front() = h;
  v.back() = h;
  return v;
}

ExactVector oscillator_q(std::size_t m) {
  ExactVector v(2 * m + 2, ExactScalar(0));
  const ExactScalar h = ExactScalar(1) / ExactScalar::sqrt2();
  v.front() = h;
  v.back() = -h;
  return v;
}

MetricLieAlgebra oscillator_literal_reading(std::size_t m) {
  const MetricLieAlgebra good = oscillator(m);
  const std::size_t n = good.dim();
  StructureTensor c = good.structure();
  const ExactVector pv = oscillator_p(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (!pv[k].is_zero()) c.set_bracket(1 + i, 1 + m + j, k, pv[k]);
      }
    }
  }
  return MetricLieAlgebra("oscillator-literal(" + std::to_string(m) + ")", good.signature(), c,
                          good.labels());
}

MetricLieAlgebra product(const MetricLieAlgebra& factor, int time_sign) {
  if (time_sign != 1 && time_sign != -1) bad_param("product: time sign must be +1 or -1");
  const std::size_t k = factor.dim();
  StructureTensor c(k + 1);
  for (const auto& e : factor.entries<ExactScalar>()) c(e.i, e.j, e.k) = e.value;
  std::vector<int> eps = factor.signature().values();
  eps.push_back(time_sign);
  std::vector<std::string> labels = factor.labels();
  labels.push_back("T");
  const std::string prefix = time_sign < 0 ? "product(-R x " : "product(R x ";
  return MetricLieAlgebra(prefix + factor.name() + ")", Signature(eps), std::move(c), labels);
}

MetricLieAlgebra catalog_algebra(const CatalogId& id) {
  if (id.name == "euclidean") {
    id.restrict_to({"n"});
    return euclidean(positive_size(id, "n", 3));
  }
  if (id.name == "minkowski") {
    id.restrict_to({"n"});
    return minkowski(positive_size(id, "n", 3));
  }
  if (id.name == "su2") {
    id.restrict_to({"scale"});
    return su2(id.rational("scale", 1));
  }
  if (id.name == "u2") {
    id.restrict_to({"scale"});
    return u2(id.rational("scale", 1));
  }
  if (id.name == "sl2r") {
    id.restrict_to({});
    return sl2r();
  }
  if (id.name == "oscillator") {
    id.restrict_to({"m"});
    return oscillator(positive_size(id, "m", 1));
  }
  if (id.name == "product") {
    id.restrict_to({"factor", "time", "n", "scale"});
    const std::string factor = id.text("factor", "su2");
    const long time = id.integer("time", -1);
    MetricLieAlgebra f;
    if (factor == "su2") {
      f = su2(id.rational("scale", 1));
    } else if (factor == "u2") {
      f = u2(id.rational("scale", 1));
    } else if (factor == "euclidean") {
      f = euclidean(positive_size(id, "n", 3));
    } else {
      bad_param("product: unknown factor '" + factor + "'");
    }
    return product(f, static_cast<int>(time));
  }
  throw GeometryError(ErrorKind::UnknownCatalogEntry, "unknown catalog algebra '" + id.name + "'");
}

MetricLieAlgebra catalog_algebra(std::string_view text) {
  return catalog_algebra(CatalogId::parse(text));
}

bool is_algebra_name(std::string_view name) {
  static constexpr std::string_view kNames[] = {"euclidean", "minkowski", "su2",    "u2",
                                                "sl2r",      "oscillator", "product"};
  return std::find(std::begin(kNames), std::end(kNames), name) != std::end(kNames);
}

bool is_immersion_name(std::string_view name) {
  static constexpr std::string_view kNames[] = {"sphere",         "graph",     "hyperbolic_graph",
                                                "subgroup_slice", "su2_in_u2", "affine_subspace"};
  return std::find(std::begin(kNames), std::end(kNames), name) != std::end(kNames);
}

std::vector<CatalogEntryInfo> catalog_list() {
  return {
      {"euclidean", "algebra", "n (dimension, default 3)", "euclidean:n=3"},
      {"minkowski", "algebra", "n (dimension, default 3; last direction timelike)", "minkowski:n=4"},
      {"su2", "algebra", "scale (metric scale, default 1; 2 gives -Killing)", "su2"},
      {"u2", "algebra", "scale (su2 part)", "u2"},
      {"sl2r", "algebra", "none (Killing metric, Lorentzian)", "sl2r"},
      {"oscillator", "algebra", "m (default 1)", "oscillator:m=2"},
      {"product", "algebra", "factor=su2|u2|euclidean, time=-1|1, n, scale", "product:factor=su2"},
      {"sphere", "immersion", "r, orient=out|in, ambient (euclidean:n=3)",
       "sphere:r=1.5,ambient=euclidean:n=3"},
      {"graph", "immersion", "amp, width, ambient (euclidean|minkowski|product)",
       "graph:amp=0.1,ambient=product:factor=su2"},
      {"hyperbolic_graph", "immersion", "r, perturb, extent, ambient (minkowski:n=3)",
       "hyperbolic_graph:r=1"},
      {"subgroup_slice", "immersion", "t, ambient (product|u2|euclidean|minkowski|oscillator)",
       "subgroup_slice:t=0,ambient=product:factor=su2"},
      {"su2_in_u2", "immersion", "none", "su2_in_u2"},
      {"affine_subspace", "immersion", "offset, ambient (euclidean|minkowski)",
       "affine_subspace:ambient=minkowski:n=3"},
  };
}

}  // namespace liegeo::catalog
