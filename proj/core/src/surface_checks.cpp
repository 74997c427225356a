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

#include "liegeo/surface_checks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace liegeo {

// --- Grid --------------------------------------------------------------------

Grid::Grid(ParamBox box, std::size_t per_axis) : box_(std::move(box)), per_axis_(per_axis) {
  if (per_axis_ < 2) throw GeometryError(ErrorKind::InvalidParameter, "grid needs >= 2 nodes per axis");
}

double Grid::spacing() const {
  return (box_.hi - box_.lo).minCoeff() / static_cast<double>(per_axis_ - 1);
}

std::size_t Grid::node_count() const {
  std::size_t total = 1;
  for (std::size_t k = 0; k < box_.dim(); ++k) total *= per_axis_;
  return total;
}

Vec Grid::node(const std::vector<std::size_t>& index) const {
  Vec u(box_.lo.size());
  const double last = static_cast<double>(per_axis_ - 1);
  for (Eigen::Index k = 0; k < u.size(); ++k) {
    const auto i = index[static_cast<std::size_t>(k)];
    // Exact end points, so boundary nodes never drift outside the box.
    if (i + 1 == per_axis_) {
      u[k] = box_.hi[k];
    } else {
      u[k] = box_.lo[k] + (box_.hi[k] - box_.lo[k]) * (static_cast<double>(i) / last);
    }
  }
  return u;
}

void Grid::for_each(bool interior, const std::function<void(const Vec&)>& fn) const {
  const std::size_t n = box_.dim();
  const std::size_t first = interior ? 1 : 0;
  const std::size_t stop = interior ? per_axis_ - 1 : per_axis_;
  if (first >= stop) return;
  std::vector<std::size_t> index(n, first);
  while (true) {
    fn(node(index));
    std::size_t k = 0;
    while (k < n) {
      if (++index[k] < stop) break;
      index[k] = first;
      ++k;
    }
    if (k == n) break;
  }
}

Grid Grid::shrunk(double factor) const {
  const Vec c = box_.center();
  const Vec half = (box_.hi - box_.lo) / 2;
  return Grid(ParamBox{c - factor * half, c + factor * half}, per_axis_);
}

// --- statistics --------------------------------------------------------------

void ResidualStats::add(double v, const Vec& u) {
  if (count == 0 || v > max) {
    max = v;
    argmax = u;
  }
  if (count == 0 || v < min) {
    min = v;
    argmin = u;
  }
  sum += v;
  sum_sq += v * v;
  ++count;
}

double ResidualStats::stddev() const {
  if (count < 2) return 0.0;
  const double m = mean();
  return std::sqrt(std::max(0.0, sum_sq / static_cast<double>(count) - m * m));
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inapplicable: return "inapplicable";
    case CheckStatus::Info: return "info";
  }
  return "info";
}

bool SurfaceReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckSummary& c) { return c.status == CheckStatus::Fail; });
}

const CheckSummary* SurfaceReport::find(const std::string& id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

const std::vector<std::string>& surface_check_ids() {
  static const std::vector<std::string> ids{
      "normal",     "symmetry",       "maurer_cartan",     "lemma31",   "grad",
      "gradnorm",   "laplacian",      "duality_raw",       "duality_corrected",
      "nullity",    "projection",     "gradient_bound",    "jacobi",    "threshold",
      "umbilicity_defect", "umbilicity_gap", "homothety"};
  return ids;
}

double roundoff_floor(double h, int derivative_order) {
  return 64.0 * std::numeric_limits<double>::epsilon() / std::pow(h, derivative_order);
}

namespace {

std::set<std::string> resolve_checks(const std::vector<std::string>& requested) {
  static const std::map<std::string, std::string> aliases{
      {"lemma32", "grad"}, {"lemma34", "gradnorm"}, {"lemma35", "laplacian"},
      {"duality", "duality_raw"}, {"umbilicity", "umbilicity_defect"}};
  std::set<std::string> out;
  const auto& ids = surface_check_ids();
  for (const auto& r : requested) {
    if (r == "all") {
      out.insert(ids.begin(), ids.end());
      continue;
    }
    const auto alias = aliases.find(r);
    const std::string id = alias == aliases.end() ? r : alias->second;
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
      throw GeometryError(ErrorKind::InvalidParameter, "unknown surface check '" + r + "'");
    }
    out.insert(id);
    if (id == "duality_raw") out.insert("duality_corrected");
    if (id == "umbilicity_defect") out.insert("umbilicity_gap");
  }
  return out;
}

double max_value(const std::vector<LemmaResidual>& rs) {
  double m = 0;
  for (const auto& r : rs) m = std::max(m, r.value);
  return m;
}

struct Accumulator {
  std::map<std::string, ResidualStats> stats;
  ResidualStats mean_curvature;
  bool homothety_precondition = true;
  std::string homothety_note;

  void add(const std::string& id, double v, const Vec& u) { stats[id].add(v, u); }
};

void scan_pass(const ImmersionChart& chart, const Grid& grid, double h,
               const std::set<std::string>& want, const std::optional<Vec>& x,
               bool convergence_only, Accumulator& acc) {
  const FloatAmbient& ops = chart.ops();
  const bool riemannian = !ops.lorentzian();
  const bool unit_x = x && std::abs(ops.inner(*x, *x) - 1.0) <= 1e-12;
  auto on = [&](const char* id) { return want.count(id) != 0; };

  grid.for_each(true, [&](const Vec& u) {
    PointEvaluator ev(chart, u, h);
    if (on("grad")) acc.add("grad", max_value(ev.gradient()), u);
    if (on("gradnorm")) acc.add("gradnorm", max_value(ev.gradnorm()), u);
    if (on("laplacian")) acc.add("laplacian", max_value(ev.laplacian()), u);
    if (convergence_only) return;

    const PointData& pd = ev.data();
    acc.mean_curvature.add(pd.mean_curvature, u);
    if (on("normal")) {
      double worst = std::abs(ops.inner(pd.normal, pd.normal) - pd.eps_normal);
      for (Eigen::Index k = 0; k < pd.frame.cols(); ++k) {
        worst = std::max(worst, std::abs(ops.inner(pd.normal, pd.frame.col(k))));
      }
      acc.add("normal", worst, u);
    }
    if (on("symmetry")) acc.add("symmetry", (pd.shape - pd.shape.transpose()).norm(), u);
    if (on("maurer_cartan")) acc.add("maurer_cartan", chart.maurer_cartan_defect(u, h), u);
    if (on("lemma31")) acc.add("lemma31", lemma31_max(ops, pd), u);
    if (on("duality_raw") || on("duality_corrected")) {
      const GaussDuality d = ev.duality();
      acc.add("duality_raw", d.raw, u);
      acc.add("duality_corrected", d.corrected, u);
    }
    if (on("nullity")) acc.add("nullity", static_cast<double>(gauss_nullity(pd)), u);
    if (riemannian && unit_x) {
      if (on("projection")) acc.add("projection", projection_identity_check(ops, pd, *x).residual, u);
      if (on("gradient_bound")) acc.add("gradient_bound", ev.gradient_bound(*x).slack, u);
      if (on("jacobi")) acc.add("jacobi", ev.jacobi(*x).value, u);
    }
    if (!riemannian) {
      const Umbilicity um = umbilicity_and_threshold(chart, pd);
      if (on("threshold")) acc.add("threshold", um.threshold, u);
      if (on("umbilicity_defect")) acc.add("umbilicity_defect", um.defect, u);
      if (on("umbilicity_gap")) acc.add("umbilicity_gap", um.gap, u);
      if (on("homothety") && acc.homothety_precondition) {
        try {
          acc.add("homothety", ev.homothety(1e-6).deviation, u);
        } catch (const GeometryError& e) {
          if (e.kind() != ErrorKind::PreconditionFailed) throw;
          acc.homothety_precondition = false;
          acc.homothety_note = e.what();
        }
      }
    }
  });
}

CheckSummary summarize_max(const std::string& id, const ResidualStats& s, double tol) {
  CheckSummary c;
  c.id = id;
  c.stats = s;
  c.tolerance = tol;
  c.status = s.max <= tol ? CheckStatus::Pass : CheckStatus::Fail;
  return c;
}

}  // namespace

SurfaceReport verify_surface(const ImmersionChart& chart, const SurfaceVerifyConfig& config) {
  if (config.grid < 4) throw GeometryError(ErrorKind::InvalidParameter, "grid must be >= 4 per axis");
  if (!(config.h > 0)) throw GeometryError(ErrorKind::InvalidParameter, "h must be > 0");
  const Grid grid(chart.domain(), config.grid);
  if (grid.spacing() < 2 * config.h) {
    throw GeometryError(ErrorKind::DomainViolation,
                        "grid spacing " + std::to_string(grid.spacing()) +
                            " is below the differencing reach 2h");
  }
  const std::set<std::string> want = resolve_checks(config.checks);
  const std::optional<Vec> x = config.direction ? config.direction : chart.info().reference;
  const FloatAmbient& ops = chart.ops();
  const bool riemannian = !ops.lorentzian();

  Accumulator acc;
  scan_pass(chart, grid, config.h, want, x, false, acc);
  Accumulator half;
  const bool need_half =
      config.convergence && (want.count("grad") || want.count("gradnorm") || want.count("laplacian"));
  if (need_half) scan_pass(chart, grid, config.h / 2, want, x, true, half);

  SurfaceReport report;
  report.fixture = chart.name();
  report.algebra = chart.ambient().name();
  report.grid = config.grid;
  report.h = config.h;

  const std::map<std::string, double> tolerances{
      {"normal", 1e-10},        {"symmetry", 1e-8},       {"maurer_cartan", 1e-6},
      {"lemma31", 1e-12},       {"grad", 1e-6},           {"gradnorm", 1e-6},
      {"laplacian", 1e-5},      {"duality_raw", 1e-5},    {"duality_corrected", 1e-5},
      {"projection", 1e-12},    {"gradient_bound", 1e-8}, {"jacobi", 1e-5},
      {"umbilicity_gap", 1e-8}, {"homothety", 1e-6}};
  const std::map<std::string, int> orders{{"grad", 1}, {"gradnorm", 1}, {"laplacian", 2}};
  const double h_range = acc.mean_curvature.empty() ? 0.0
                                                    : acc.mean_curvature.max - acc.mean_curvature.min;

  for (const std::string& id : surface_check_ids()) {
    if (!want.count(id)) continue;
    const auto it = acc.stats.find(id);
    CheckSummary c;
    c.id = id;
    if (auto t = tolerances.find(id); t != tolerances.end()) c.tolerance = t->second;

    auto inapplicable = [&](std::string why) {
      c.status = CheckStatus::Inapplicable;
      c.note = std::move(why);
      report.checks.push_back(c);
    };
    if (id == "projection" || id == "gradient_bound" || id == "jacobi") {
      if (!riemannian) {
        inapplicable("requires a Riemannian ambient");
        continue;
      }
      if (!x) {
        inapplicable("no direction X given and the chart has no reference direction");
        continue;
      }
    }
    if ((id == "threshold" || id == "umbilicity_defect" || id == "umbilicity_gap" ||
         id == "homothety") && riemannian) {
      inapplicable("requires a Lorentzian ambient");
      continue;
    }
    if (id == "homothety" && !acc.homothety_precondition) {
      inapplicable(acc.homothety_note);
      continue;
    }
    if (it == acc.stats.end()) {
      inapplicable("no interior grid nodes");
      continue;
    }
    const ResidualStats& s = it->second;

    if (id == "nullity" || id == "threshold" || id == "umbilicity_defect") {
      c.stats = s;
      c.status = CheckStatus::Info;
    } else if (id == "gradient_bound") {
      c.stats = s;
      c.status = s.min >= -c.tolerance ? CheckStatus::Pass : CheckStatus::Fail;
      c.note = "slack C|pi_X(eta)| - |grad f_X|; must stay >= -tolerance";
    } else if (id == "umbilicity_gap") {
      c.stats = s;
      c.status = s.min >= -c.tolerance ? CheckStatus::Pass : CheckStatus::Fail;
      c.note = "|A|^2 - H^2/n; must stay >= -tolerance";
    } else {
      c = summarize_max(id, s, c.tolerance);
    }

    if (id == "jacobi" && h_range > 1e-6) {
      c.status = CheckStatus::Inapplicable;
      c.note = "mean curvature is not constant on the grid (range " + std::to_string(h_range) + ")";
    }

    if (auto o = orders.find(id); o != orders.end() && need_half) {
      const ResidualStats& hs = half.stats.at(id);
      c.half = hs;
      c.ratio_applicable = s.max > roundoff_floor(config.h, o->second);
      if (hs.max > 0) c.convergence_ratio = s.max / hs.max;
      if (c.ratio_applicable) {
        const bool in_range =
            c.convergence_ratio && *c.convergence_ratio >= 3.5 && *c.convergence_ratio <= 4.5;
        if (!in_range) {
          c.status = CheckStatus::Fail;
          c.note = "convergence ratio outside [3.5, 4.5]";
        }
      } else {
        c.note = "residual at roundoff level; convergence ratio not applicable";
      }
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

TransversalityReport transversality_scan(const ImmersionChart& chart, const Vec& x,
                                         const Grid& grid, double tol) {
  const FloatAmbient& ops = chart.ops();
  const std::size_t n = grid.box().dim();
  const std::size_t m = grid.per_axis();
  std::vector<double> values;
  values.reserve(grid.node_count());
  grid.for_each(false, [&](const Vec& u) { values.push_back(ops.inner(chart.normal(u), x)); });

  TransversalityReport out;
  out.min_abs = std::numeric_limits<double>::infinity();
  out.min_value = std::numeric_limits<double>::infinity();
  out.max_value = -std::numeric_limits<double>::infinity();
  for (double v : values) {
    out.min_abs = std::min(out.min_abs, std::abs(v));
    out.min_value = std::min(out.min_value, v);
    out.max_value = std::max(out.max_value, v);
  }
  // for_each visits axis 0 fastest, so the neighbour along axis k is `stride` away.
  auto sign = [](double v) { return (v > 0) - (v < 0); };
  std::size_t stride = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if ((i / stride) % m == m - 1) continue;
      const int a = sign(values[i]);
      const int b = sign(values[i + stride]);
      if (a != b || a == 0) ++out.sign_changes;
    }
    stride *= m;
  }
  out.transversal = out.sign_changes == 0 && out.min_abs > tol;
  return out;
}

}  // namespace liegeo
