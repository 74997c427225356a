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

#include "liegeo/theorem_lab.hpp"

#include "liegeo/catalog.hpp"
#include "liegeo/error.hpp"
#include "liegeo/format.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace liegeo {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "consistent";
    case Verdict::Violated: return "violated";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

const char* to_string(Evidence e) {
  switch (e) {
    case Evidence::Exact: return "exact";
    case Evidence::Sampled: return "sampled";
    case Evidence::SampledOnly: return "sampled-only";
    case Evidence::Metadata: return "metadata";
  }
  return "?";
}

void TheoremReport::decide() {
  witness.reset();
  for (const auto& p : hypotheses) {
    if (!p.holds) {
      verdict = Verdict::Inapplicable;
      return;
    }
  }
  for (const auto& p : conclusions) {
    if (!p.holds) {
      verdict = Verdict::Violated;
      witness = p;
      return;
    }
  }
  verdict = Verdict::Consistent;
}

namespace {

template <class T>
std::string text(const T& v) {
  if constexpr (ScalarTraits<T>::exact) {
    return v.to_string();
  } else {
    return format_double(v);
  }
}

Predicate exact_pred(std::string name, bool holds, std::string detail = {}) {
  Predicate p;
  p.name = std::move(name);
  p.evidence = Evidence::Exact;
  p.holds = holds;
  p.detail = std::move(detail);
  return p;
}

Predicate meta_pred(std::string name, bool holds, std::string detail = {}) {
  Predicate p = exact_pred(std::move(name), holds, std::move(detail));
  p.evidence = Evidence::Metadata;
  return p;
}

/// value <= tol, located at `where`.
Predicate bound_pred(std::string name, Evidence ev, double value, double tol, const Vec& where,
                     std::string detail = {}) {
  Predicate p;
  p.name = std::move(name);
  p.evidence = ev;
  p.value = value;
  p.tolerance = tol;
  p.holds = std::isfinite(value) && value <= tol;
  if (where.size() > 0) p.location = where;
  p.detail = std::move(detail);
  return p;
}

/// value >= -tol.
Predicate floor_pred(std::string name, Evidence ev, double value, double tol, const Vec& where,
                     std::string detail = {}) {
  Predicate p;
  p.name = std::move(name);
  p.evidence = ev;
  p.value = value;
  p.tolerance = tol;
  p.holds = std::isfinite(value) && value >= -tol;
  if (where.size() > 0) p.location = where;
  p.detail = std::move(detail);
  return p;
}

Predicate info_pred(std::string name, Evidence ev, double value, std::string detail = {}) {
  Predicate p;
  p.name = std::move(name);
  p.evidence = ev;
  p.value = value;
  p.detail = std::move(detail);
  return p;
}

double abs_max(const ResidualStats& s) {
  if (s.empty()) return 0;
  return std::max(std::abs(s.min), std::abs(s.max));
}

const Vec& abs_argmax(const ResidualStats& s) {
  return std::abs(s.min) > std::abs(s.max) ? s.argmin : s.argmax;
}

std::size_t label_index(const MetricLieAlgebra& alg, const std::string& label) {
  const auto& ls = alg.labels();
  const auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) {
    throw GeometryError(ErrorKind::InvalidParameter, "no basis vector labelled " + label);
  }
  return static_cast<std::size_t>(it - ls.begin());
}

std::string label_of(const MetricLieAlgebra& alg, std::size_t i) {
  if (i < alg.labels().size()) return alg.labels()[i];
  return "e" + std::to_string(i + 1);
}

}  // namespace

// --- algebra level -----------------------------------------------------------

EinsteinCheck einstein_check(const MetricLieAlgebra& alg) {
  const auto b = killing_matrix<ExactScalar>(alg);
  const std::size_t n = alg.dim();
  EinsteinCheck out;
  std::optional<ExactScalar> lambda;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      if (a != c && !b(a, c).is_zero()) return out;
    }
    // Ric(e_a, e_a) = lambda eps_a
    ExactScalar l = -b(a, a) / ExactScalar(4);
    if (alg.eps(a) < 0) l = -l;
    if (lambda && *lambda != l) return out;
    lambda = l;
  }
  out.einstein = true;
  out.lambda = lambda.value_or(ExactScalar(0));
  return out;
}

AlgebraReport algebra_report(const MetricLieAlgebra& alg) {
  AlgebraReport r;
  r.algebra = alg.name();
  r.validation = validate(alg, true);
  if (!r.validation.passed()) {
    throw GeometryError(ErrorKind::InvalidDocument,
                        "algebra_report: " + alg.name() + " fails validation");
  }
  r.center = center(alg);
  r.semisimplicity = is_semisimple(alg);
  r.codim1 = codim1_subalgebra(alg);
  r.einstein = einstein_check(alg);

  TheoremReport& t = r.lemma21;
  t.theorem_id = "L21";
  t.subject = alg.name();
  t.hypotheses.push_back(exact_pred("validate passes", true));
  const bool riemannian = !alg.signature().lorentzian();
  t.hypotheses.push_back(exact_pred("riemannian signature", riemannian));
  const bool has_center = !r.center.empty();
  const bool has_sub = r.codim1.has_value();
  Predicate p = exact_pred("nontrivial center iff codimension-one subalgebra", has_center == has_sub,
                           "center dim " + std::to_string(r.center.size()) +
                               (has_sub ? ", subalgebra " + r.codim1->construction
                                        : ", no subalgebra found"));
  p.value = static_cast<double>(r.center.size());
  p.tolerance = 0;
  t.conclusions.push_back(std::move(p));
  t.decide();
  return r;
}

namespace {

template <class T>
std::vector<CurvatureEntry> plane_table(const MetricLieAlgebra& alg) {
  std::vector<CurvatureEntry> out;
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto k = sectional_curvature<T>(alg, alg.basis_vector<T>(i), alg.basis_vector<T>(j));
      CurvatureEntry e;
      e.label = "K(" + label_of(alg, i) + "," + label_of(alg, j) + ")";
      e.defined = k.defined;
      e.value = k.defined ? text(k.value) : k.reason;
      e.numeric = k.defined ? ScalarTraits<T>::to_double(k.value)
                            : std::numeric_limits<double>::quiet_NaN();
      out.push_back(std::move(e));
    }
  }
  return out;
}

template <class T>
std::vector<RicciEntry> ric_table(const MetricLieAlgebra& alg) {
  std::vector<RicciEntry> out;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const auto e = alg.basis_vector<T>(i);
    RicciEntry r;
    r.label = label_of(alg, i);
    r.ricci = text(ricci<T>(alg, e, e));
    r.directional = text(ricci_directional<T>(alg, e));
    out.push_back(std::move(r));
  }
  return out;
}

template <class T>
T from_rational(const Rational& a) {
  if constexpr (ScalarTraits<T>::exact) {
    return ExactScalar(a);
  } else {
    return static_cast<double>(a);
  }
}

template <class T>
bool same(const T& x, const T& y) {
  if constexpr (ScalarTraits<T>::exact) {
    return x == y;
  } else {
    return std::abs(x - y) <= 1e-12;
  }
}

template <class T>
std::vector<FamilyEntry> families(std::size_t m, const std::vector<Rational>& params) {
  const MetricLieAlgebra alg = catalog::oscillator(m);
  const std::size_t iu = label_index(alg, "U");
  const std::size_t iv = label_index(alg, "V");
  const auto e = [&](std::size_t i) { return alg.basis_vector<T>(i); };
  const auto comb = [&](const T& a, std::size_t i, std::size_t j) {
    Vector<T> v = e(i);
    for (auto& c : v) c *= a;
    v[j] += T(1);
    return v;
  };
  std::vector<FamilyEntry> out;
  const auto push = [&](std::string label, std::string a, const Vector<T>& x, const Vector<T>& y,
                        const T& closed) {
    const auto k = sectional_curvature<T>(alg, x, y);
    FamilyEntry f;
    f.label = std::move(label);
    f.a = std::move(a);
    f.value = k.defined ? text(k.value) : k.reason;
    f.closed_form = text(closed);
    f.matches = k.defined && same<T>(k.value, closed);
    out.push_back(std::move(f));
  };

  push("K(V,U)", "", e(iv), e(iu), T(0));
  for (std::size_t i = 1; i <= m; ++i) {
    const std::string si = std::to_string(i);
    const std::size_t ix = label_index(alg, "X" + si);
    const std::size_t iy = label_index(alg, "Y" + si);
    push("K(V,X" + si + ")", "", e(iv), e(ix), T(-1) / T(8));
    push("K(V,Y" + si + ")", "", e(iv), e(iy), T(-1) / T(8));
  }
  for (const Rational& ar : params) {
    const T a = from_rational<T>(ar);
    const std::string at = text(ExactScalar(ar));
    const T one(1);
    for (std::size_t i = 1; i <= m; ++i) {
      const std::string si = std::to_string(i);
      const std::size_t ix = label_index(alg, "X" + si);
      push("K(aV+U,X" + si + ")", at, comb(a, iv, iu), e(ix), (one - a) / (T(8) * (one + a)));
      push("K(aV+X" + si + ",U)", at, comb(a, iv, ix), e(iu), one / (T(8) * (one - a * a)));
      for (std::size_t j = 1; j <= m; ++j) {
        const std::string sj = std::to_string(j);
        push("K(aV+X" + si + ",Y" + sj + ")", at, comb(a, iv, ix),
             e(label_index(alg, "Y" + sj)), a * a / (T(8) * (one - a * a)));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<CurvatureEntry> coordinate_plane_table(const MetricLieAlgebra& alg, bool exact) {
  return exact ? plane_table<ExactScalar>(alg) : plane_table<double>(alg);
}

std::vector<RicciEntry> ricci_table(const MetricLieAlgebra& alg, bool exact) {
  return exact ? ric_table<ExactScalar>(alg) : ric_table<double>(alg);
}

std::vector<FamilyEntry> oscillator_families(std::size_t m, const std::vector<Rational>& params,
                                             bool exact) {
  return exact ? families<ExactScalar>(m, params) : families<double>(m, params);
}

LorentzPlaneReport lorentz_plane_sup(const MetricLieAlgebra& alg, std::size_t samples,
                                     std::uint64_t seed) {
  if (!alg.signature().lorentzian()) {
    throw GeometryError(ErrorKind::InvalidSignature,
                        "lorentz_plane_sup: " + alg.name() + " is not Lorentzian");
  }
  const std::size_t n = alg.dim();
  const std::size_t tp = alg.signature().timelike_position();
  LorentzPlaneReport r;
  r.samples = samples;
  r.seed = seed;
  r.sup = -std::numeric_limits<double>::infinity();

  const auto to_vec = [](const FloatVector& v) {
    return Vec(Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size())));
  };

  for (std::size_t s = 0; s < samples; ++s) {
    // Each sample owns its stream, so a longer run extends a shorter one.
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32)};
    std::mt19937_64 rng(seq);
    const auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    const auto gaussian = [&] {
      const double u1 = 1.0 - uniform();
      const double u2 = uniform();
      return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    };

    FloatVector t(n, 0.0);
    double spatial = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == tp) continue;
      t[i] = -3.0 + 6.0 * uniform();
      spatial += t[i] * t[i];
    }
    t[tp] = std::sqrt(1.0 + spatial);

    FloatVector w(n);
    for (auto& c : w) c = gaussian();
    const double wt = inner<double>(alg, w, t);
    for (std::size_t i = 0; i < n; ++i) w[i] += wt * t[i];  // <t,t> = -1
    const double ww = inner<double>(alg, w, w);
    if (!(ww > 1e-12)) {
      ++r.rejected;
      continue;
    }
    for (auto& c : w) c /= std::sqrt(ww);

    SectionalCurvature<double> k;
    try {
      k = sectional_curvature<double>(alg, t, w);
    } catch (const GeometryError&) {
      ++r.rejected;
      continue;
    }
    if (!k.defined) {
      ++r.rejected;
      continue;
    }
    ++r.accepted;
    if (k.value > r.sup) {
      r.sup = k.value;
      r.argmax_t = to_vec(t);
      r.argmax_w = to_vec(w);
    }
  }

  if (alg.name().rfind("oscillator(", 0) == 0 && n >= 4 && n % 2 == 0) {
    const std::size_t m = (n - 2) / 2;
    double best = -std::numeric_limits<double>::infinity();
    const std::vector<Rational> params{Rational(3, 2), Rational(-3, 2), Rational(2),
                                       Rational(-2),   Rational(10),    Rational(-10)};
    for (const auto& f : families<double>(m, params)) {
      best = std::max(best, std::stod(f.closed_form));
    }
    r.family_sup = best;
  }
  return r;
}

// --- hypersurface level ------------------------------------------------------

HypersurfaceScan scan_hypersurface(const ImmersionChart& chart, std::size_t grid, double h,
                                   const Vec& x) {
  const FloatAmbient& ops = chart.ops();
  if (static_cast<std::size_t>(x.size()) != ops.dim()) {
    throw GeometryError(ErrorKind::DimensionMismatch, "direction has the wrong dimension");
  }
  const Grid g(chart.domain(), grid);
  if (g.spacing() < 2 * h) {
    throw GeometryError(ErrorKind::DomainViolation, "grid spacing below 2h");
  }
  const bool lorentzian = ops.lorentzian();
  const bool unit_x = std::abs(std::abs(ops.inner(x, x)) - 1.0) <= 1e-12;

  HypersurfaceScan s;
  std::size_t near_sphere = 0;
  bool homothety_ok = lorentzian;
  g.for_each(true, [&](const Vec& u) {
    PointEvaluator ev(chart, u, h);
    const PointData& pd = ev.data();
    ++s.nodes;
    s.mean_curvature.add(pd.mean_curvature, u);
    s.shape_norm.add(std::sqrt(pd.a_norm_sq), u);
    s.ric_normal.add(pd.ric_normal, u);
    s.support.add(support_function(ops, pd, x), u);
    s.nullity.add(static_cast<double>(gauss_nullity(pd)), u);
    if (pd.normal.cwiseAbs().minCoeff() < 1e-3) ++near_sphere;
    if (!lorentzian) {
      s.jacobi.add(ev.jacobi(x).value, u);
      if (unit_x) {
        const GradientBound gb = ev.gradient_bound(x);
        s.gradient_slack.add(gb.slack, u);
        s.pi_norm.add(gb.pi_norm, u);
      }
    } else {
      const Umbilicity um = umbilicity_and_threshold(chart, pd);
      s.threshold.add(um.threshold, u);
      s.umbilic_defect.add(um.defect, u);
      s.umbilic_gap.add(um.gap, u);
      if (homothety_ok) {
        try {
          const Homothety ho = ev.homothety(1e-6);
          s.homothety.add(ho.deviation, u);
          s.homothety_factor.add(ho.fitted_factor, u);
        } catch (const GeometryError& e) {
          if (e.kind() != ErrorKind::PreconditionFailed) throw;
          homothety_ok = false;
          s.homothety_note = e.what();
        }
      }
    }
  });
  if (!homothety_ok) {
    s.homothety = {};
    s.homothety_factor = {};
  }
  s.great_sphere_fraction =
      s.nodes ? static_cast<double>(near_sphere) / static_cast<double>(s.nodes) : 0.0;
  s.transversality = transversality_scan(chart, x, g);
  s.transversality_half = transversality_scan(chart, x, g.shrunk(0.5));
  return s;
}

namespace {

constexpr double kCmcTol = 1e-6;
constexpr double kShapeTol = 1e-8;
constexpr double kRicTol = 1e-12;
constexpr double kSupportTol = 1e-8;
constexpr double kJacobiTol = 1e-5;
constexpr double kSlackTol = 1e-8;
constexpr double kThresholdTol = 1e-10;
constexpr double kUmbilicTol = 1e-8;
constexpr double kHomothetyTol = 1e-6;
constexpr double kIdentityTol = 1e-6;

struct Context {
  const ImmersionChart& chart;
  const HypersurfaceScan& scan;
  const Vec& x;
  double x_norm = 0;  // <X, X>
};

Predicate signature_pred(const Context& c, bool want_lorentzian) {
  const bool l = c.chart.ops().lorentzian();
  return exact_pred(want_lorentzian ? "lorentzian ambient" : "riemannian ambient",
                    l == want_lorentzian);
}

Predicate cmc_pred(const Context& c) {
  const auto& h = c.scan.mean_curvature;
  return bound_pred("constant mean curvature", Evidence::Sampled, h.max - h.min, kCmcTol,
                    h.argmax, "H in [" + format_double(h.min) + ", " + format_double(h.max) + "]");
}

Predicate transversal_pred(const Context& c) {
  const auto& t = c.scan.transversality;
  Predicate p;
  p.name = "transversal to X";
  p.evidence = Evidence::Sampled;
  p.value = t.min_abs;
  p.holds = t.transversal;
  p.detail = std::to_string(t.sign_changes) + " sign changes";
  return p;
}

Predicate shape_zero(const Context& c) {
  return bound_pred("A = 0", Evidence::Sampled, c.scan.shape_norm.max, kShapeTol,
                    c.scan.shape_norm.argmax);
}

Predicate ric_zero(const Context& c) {
  return bound_pred("Ric(N,N) = 0", Evidence::Sampled, abs_max(c.scan.ric_normal), kRicTol,
                    abs_argmax(c.scan.ric_normal));
}

Predicate support_constant(const Context& c) {
  return bound_pred("f_X constant", Evidence::Sampled, c.scan.support.stddev(), kSupportTol, {},
                    "standard deviation of f_X");
}

/// c = -inf f_X over the whole grid versus over the half-size grid.
Predicate gauss_image_bounded(const Context& c) {
  const double full = -c.scan.transversality.min_value;
  const double half = -c.scan.transversality_half.min_value;
  Predicate p;
  p.name = "bounded Gauss map image";
  p.evidence = Evidence::SampledOnly;
  p.value = full;
  if (c.chart.info().compact) {
    p.holds = true;
    p.evidence = Evidence::Metadata;
    p.detail = "compact";
  } else {
    p.holds = full <= half + 1e-9 * std::max(1.0, std::abs(half));
    p.detail = "c = " + format_double(full) + " on the grid, " + format_double(half) +
               " on the half-size grid";
  }
  return p;
}

TheoremReport t41(const Context& c) {
  TheoremReport t;
  t.theorem_id = "T41";
  t.subject = c.chart.name();
  t.hypotheses.push_back(signature_pred(c, false));
  if (t.hypotheses.back().holds) {
    t.hypotheses.push_back(meta_pred("compact", c.chart.info().compact));
    t.hypotheses.push_back(cmc_pred(c));
    t.hypotheses.push_back(transversal_pred(c));
    t.conclusions.push_back(ric_zero(c));
    t.conclusions.push_back(shape_zero(c));
    t.conclusions.push_back(support_constant(c));
  }
  t.decide();
  return t;
}

TheoremReport t42(const Context& c) {
  TheoremReport t;
  t.theorem_id = "T42";
  t.subject = c.chart.name();
  t.hypotheses.push_back(signature_pred(c, false));
  if (t.hypotheses.back().holds) {
    const auto cert = is_semisimple(c.chart.ambient());
    t.hypotheses.push_back(exact_pred("semisimple ambient", cert.semisimple,
                                      "Killing determinant " + cert.determinant.to_string()));
    t.hypotheses.push_back(meta_pred("compact", c.chart.info().compact));
    t.hypotheses.push_back(cmc_pred(c));
    const auto& nu = c.scan.nullity;
    Predicate p = info_pred("nullity >= 1", Evidence::Sampled, nu.min, "minimum nullity of A");
    p.holds = nu.min >= 1.0;
    p.tolerance = 1.0;
    p.location = nu.argmin;
    t.conclusions.push_back(std::move(p));
    t.diagnostics.push_back(info_pred("eta near a coordinate great sphere", Evidence::Sampled,
                                      c.scan.great_sphere_fraction,
                                      "fraction of nodes with min |eta_i| < 1e-3"));
  }
  t.decide();
  return t;
}

TheoremReport t43(const Context& c) {
  TheoremReport t;
  t.theorem_id = "T43";
  t.subject = c.chart.name();
  t.hypotheses.push_back(signature_pred(c, false));
  if (t.hypotheses.back().holds) {
    t.hypotheses.push_back(meta_pred("complete", c.chart.info().complete));
    const auto& h = c.scan.mean_curvature;
    t.hypotheses.push_back(bound_pred("minimal", Evidence::Sampled, abs_max(h), kCmcTol,
                                      abs_argmax(h)));
    t.hypotheses.push_back(transversal_pred(c));
    t.conclusions.push_back(bound_pred("L f_X = 0", Evidence::Sampled, c.scan.jacobi.max,
                                       kJacobiTol, c.scan.jacobi.argmax,
                                       "f_X is a Jacobi field of fixed sign"));
    t.diagnostics.push_back(info_pred("noncompact", Evidence::Metadata,
                                      c.chart.info().compact ? 0.0 : 1.0,
                                      "not used by the pointwise Jacobi-field argument"));
  }
  t.decide();
  return t;
}

TheoremReport t44(const Context& c) {
  TheoremReport t;
  t.theorem_id = "T44";
  t.subject = c.chart.name();
  t.hypotheses.push_back(signature_pred(c, false));
  if (t.hypotheses.back().holds) {
    t.hypotheses.push_back(meta_pred("complete", c.chart.info().complete));
    t.hypotheses.push_back(meta_pred("noncompact", !c.chart.info().compact));
    t.hypotheses.push_back(exact_pred("|X| = 1", std::abs(c.x_norm - 1.0) <= 1e-12));
    t.hypotheses.push_back(cmc_pred(c));
    Predicate bounded = info_pred("A bounded", Evidence::SampledOnly, c.scan.shape_norm.max);
    bounded.holds = std::isfinite(c.scan.shape_norm.max);
    t.hypotheses.push_back(std::move(bounded));
    t.hypotheses.push_back(transversal_pred(c));
    Predicate integrable = info_pred("|pi_X(eta)| integrable", Evidence::SampledOnly,
                                     c.scan.pi_norm.mean(), "sample mean of |pi_X(eta)|");
    integrable.holds = !c.scan.pi_norm.empty() && std::isfinite(c.scan.pi_norm.max);
    t.hypotheses.push_back(std::move(integrable));
    if (!c.scan.gradient_slack.empty()) {
      t.conclusions.push_back(floor_pred("|grad f_X| <= C |pi_X(eta)|", Evidence::Sampled,
                                         c.scan.gradient_slack.min, kSlackTol,
                                         c.scan.gradient_slack.argmin));
    }
    t.conclusions.push_back(ric_zero(c));
    t.conclusions.push_back(shape_zero(c));
  }
  t.decide();
  return t;
}

Predicate timelike_x(const Context& c) {
  return exact_pred("X unit timelike", std::abs(c.x_norm + 1.0) <= 1e-12,
                    "<X,X> = " + format_double(c.x_norm));
}

TheoremReport t51(const Context& c) {
  TheoremReport t;
  t.theorem_id = "T51";
  t.subject = c.chart.name();
  t.hypotheses.push_back(signature_pred(c, true));
  if (t.hypotheses.back().holds) {
    t.hypotheses.push_back(meta_pred("compact", c.chart.info().compact));
    t.hypotheses.push_back(cmc_pred(c));
    t.hypotheses.push_back(timelike_x(c));
    t.hypotheses.push_back(transversal_pred(c));
    t.hypotheses.push_back(floor_pred("H^2 >= -n Ric(N,N)", Evidence::Sampled,
                                      c.scan.threshold.min, kThresholdTol, c.scan.threshold.argmin,
                                      "minimum of H^2 + n Ric(N,N)"));
    t.conclusions.push_back(ric_zero(c));
    t.conclusions.push_back(shape_zero(c));
    t.conclusions.push_back(support_constant(c));
  }
  t.decide();
  return t;
}

TheoremReport l53(const Context& c) {
  TheoremReport t;
  t.theorem_id = "L53";
  t.subject = c.chart.name();
  t.hypotheses.push_back(signature_pred(c, true));
  if (t.hypotheses.back().holds) {
    t.hypotheses.push_back(timelike_x(c));
    t.hypotheses.push_back(gauss_image_bounded(c));
    const auto& r = c.scan.ric_normal;
    Predicate p = info_pred("inf Ric(N,N) > -infinity", Evidence::SampledOnly, r.min,
                            "sampled range [" + format_double(r.min) + ", " +
                                format_double(r.max) + "]");
    p.holds = std::isfinite(r.min);
    p.location = r.argmin;
    t.conclusions.push_back(std::move(p));
  }
  t.decide();
  return t;
}

TheoremReport t54(const Context& c, std::size_t plane_samples, std::uint64_t seed) {
  TheoremReport t;
  t.theorem_id = "T54";
  t.subject = c.chart.name();
  t.hypotheses.push_back(signature_pred(c, true));
  if (!t.hypotheses.back().holds) {
    t.decide();
    return t;
  }
  const std::size_t n = c.chart.dim();
  t.hypotheses.push_back(exact_pred("n >= 2", n >= 2));
  const LorentzPlaneReport planes = lorentz_plane_sup(c.chart.ambient(), plane_samples, seed);
  Predicate kp = info_pred("K bounded above on Lorentzian planes", Evidence::SampledOnly,
                           planes.sup,
                           std::to_string(planes.accepted) + " planes, seed " +
                               std::to_string(seed));
  kp.holds = planes.accepted == 0 || std::isfinite(planes.sup);
  t.hypotheses.push_back(std::move(kp));
  t.hypotheses.push_back(meta_pred("complete", c.chart.info().complete));
  t.hypotheses.push_back(cmc_pred(c));
  t.hypotheses.push_back(timelike_x(c));
  t.hypotheses.push_back(transversal_pred(c));
  t.hypotheses.push_back(gauss_image_bounded(c));

  const auto& h = c.scan.mean_curvature;
  const double inf_ric = c.scan.ric_normal.min;
  const double nd = static_cast<double>(n);
  // H is constant on the hypothesis branch; use the smallest sampled H^2.
  const double h_sq_min = std::min(h.min * h.min, h.max * h.max);
  const double h_sq_max = std::max(h.min * h.min, h.max * h.max);
  t.hypotheses.push_back(floor_pred("H^2 >= -n inf Ric(N,N)", Evidence::SampledOnly,
                                    h_sq_min + nd * inf_ric, kThresholdTol, c.scan.ric_normal.argmin,
                                    "H^2 = " + format_double(h_sq_min) + ", inf Ric = " +
                                        format_double(inf_ric)));

  t.conclusions.push_back(bound_pred("totally umbilical", Evidence::Sampled,
                                     c.scan.umbilic_defect.max, kUmbilicTol,
                                     c.scan.umbilic_defect.argmax));
  t.conclusions.push_back(bound_pred("H^2 = -n inf Ric(N,N)", Evidence::SampledOnly,
                                     std::max(std::abs(h_sq_min + nd * inf_ric),
                                              std::abs(h_sq_max + nd * inf_ric)),
                                     kIdentityTol, c.scan.ric_normal.argmin));
  if (c.scan.shape_norm.max > kShapeTol) {
    if (c.scan.homothety.empty()) {
      Predicate p = info_pred("Gauss map homothety", Evidence::Sampled,
                              std::numeric_limits<double>::quiet_NaN(), c.scan.homothety_note);
      p.holds = false;
      p.tolerance = kHomothetyTol;
      t.conclusions.push_back(std::move(p));
    } else {
      t.conclusions.push_back(bound_pred(
          "Gauss map homothety", Evidence::Sampled, c.scan.homothety.max, kHomothetyTol,
          c.scan.homothety.argmax,
          "factor " + format_double(c.scan.homothety_factor.mean()) + ", expected (H/n)^2 = " +
              format_double(h_sq_max / (nd * nd))));
    }
  }
  t.diagnostics.push_back(info_pred("H^2", Evidence::Sampled, h_sq_max));
  t.diagnostics.push_back(info_pred("sampled c", Evidence::SampledOnly,
                                    -c.scan.transversality.min_value));
  t.diagnostics.push_back(info_pred("sampled c on half-size grid", Evidence::SampledOnly,
                                    -c.scan.transversality_half.min_value));
  t.decide();
  return t;
}

}  // namespace

HypersurfaceReport hypersurface_report(const ImmersionChart& chart, std::size_t grid, double h,
                                       std::optional<Vec> x, std::size_t plane_samples,
                                       std::uint64_t seed) {
  HypersurfaceReport r;
  r.fixture = chart.info().fixture.empty() ? chart.name() : chart.info().fixture;
  r.algebra = chart.ambient().name();
  r.grid = grid;
  r.h = h;
  if (x) {
    r.direction = *x;
    r.direction_label = "custom";
  } else if (chart.info().reference) {
    r.direction = *chart.info().reference;
    r.direction_label = chart.info().reference_label;
  } else {
    throw GeometryError(ErrorKind::InvalidParameter,
                        "hypersurface_report: " + chart.name() + " has no reference direction");
  }
  r.scan = scan_hypersurface(chart, grid, h, r.direction);
  const Context c{chart, r.scan, r.direction, chart.ops().inner(r.direction, r.direction)};
  r.theorems.push_back(t41(c));
  r.theorems.push_back(t42(c));
  r.theorems.push_back(t43(c));
  r.theorems.push_back(t44(c));
  r.theorems.push_back(t51(c));
  r.theorems.push_back(l53(c));
  r.theorems.push_back(t54(c, plane_samples, seed));
  return r;
}

}  // namespace liegeo
