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

#include "cli.hpp"

#include "liegeo/catalog.hpp"
#include "liegeo/error.hpp"
#include "liegeo/format.hpp"
#include "liegeo/io.hpp"
#include "liegeo/structure.hpp"
#include "report_json.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace liegeo::cli {

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"algebra-check",  "algebra-curvature",
                                              "algebra-report", "surface-verify",
                                              "theorem-report", "catalog-list",
                                              "export"};
  return names;
}

void check_config(const RunConfig& c) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), c.command) == names.end()) {
    throw std::invalid_argument("unknown command '" + c.command + "'");
  }
  if (!(c.tol > 0)) throw std::invalid_argument("--tol must be positive");
  if (!(c.h > 0)) throw std::invalid_argument("--h must be positive");
  if (c.grid < 4) throw std::invalid_argument("--grid must be at least 4");
  if (!c.input.empty() && !c.catalog.empty()) {
    throw std::invalid_argument("--input and --catalog are mutually exclusive");
  }
  if (c.command != "catalog-list" && c.input.empty() && c.catalog.empty()) {
    throw std::invalid_argument(c.command + " needs --input or --catalog");
  }
}

namespace {

struct Output {
  std::string text;
  int code = kOk;
};

std::string read_all(std::istream& is) {
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

MetricLieAlgebra load_algebra(const RunConfig& c, std::istream& in) {
  if (!c.catalog.empty()) {
    const auto id = catalog::CatalogId::parse(c.catalog);
    if (catalog::is_immersion_name(id.name)) {
      throw std::invalid_argument("'" + id.name + "' is a hypersurface fixture, not an algebra");
    }
    return catalog::catalog_algebra(id);
  }
  if (c.input == "-") return algebra_from_json(read_all(in));
  std::ifstream f(c.input, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open '" + c.input + "'");
  return algebra_from_json(read_all(f));
}

bool immersion_requested(const RunConfig& c) {
  return !c.catalog.empty() &&
         catalog::is_immersion_name(catalog::CatalogId::parse(c.catalog).name);
}

ImmersionChart load_immersion(const RunConfig& c) {
  if (!immersion_requested(c)) {
    throw std::invalid_argument(c.command + " needs a hypersurface fixture via --catalog");
  }
  return catalog::catalog_immersion(c.catalog);
}

std::optional<Vec> parse_direction(const RunConfig& c, const MetricLieAlgebra& alg) {
  if (c.direction.empty()) return std::nullopt;
  const auto& labels = alg.labels();
  const auto it = std::find(labels.begin(), labels.end(), c.direction);
  Vec x = Vec::Zero(static_cast<Eigen::Index>(alg.dim()));
  if (it != labels.end()) {
    x[it - labels.begin()] = 1.0;
    return x;
  }
  std::vector<double> vals;
  std::stringstream ss(c.direction);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) {
      throw std::invalid_argument("--direction: '" + c.direction +
                                  "' is neither a basis label nor a coefficient list");
    }
    vals.push_back(v);
  }
  if (vals.size() != alg.dim()) {
    throw std::invalid_argument("--direction needs " + std::to_string(alg.dim()) + " coefficients");
  }
  for (std::size_t i = 0; i < vals.size(); ++i) x[static_cast<Eigen::Index>(i)] = vals[i];
  return x;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

bool is_oscillator(const MetricLieAlgebra& alg) {
  return alg.name().rfind("oscillator(", 0) == 0 && alg.dim() >= 4 && alg.dim() % 2 == 0;
}

const std::vector<Rational>& family_parameters() {
  static const std::vector<Rational> params{Rational(3, 2), Rational(-3, 2), Rational(2),
                                            Rational(-2),   Rational(10),    Rational(-10)};
  return params;
}

Output algebra_check(const RunConfig& c, std::istream& in) {
  const MetricLieAlgebra alg = load_algebra(c, in);
  const CheckReport r = validate(alg, c.exact, c.tol);
  json j = {{"command", c.command}, {"algebra", alg.name()}, {"report", to_json(r)}};
  return {dump(j), r.passed() ? kOk : kViolated};
}

std::string curvature_text(const MetricLieAlgebra& alg, const std::vector<CurvatureEntry>& planes,
                           const std::vector<RicciEntry>& ric,
                           const std::vector<FamilyEntry>& families,
                           const std::optional<LorentzPlaneReport>& sup) {
  std::ostringstream os;
  os << "algebra " << alg.name() << "\n\nsectional curvature of coordinate planes\n";
  for (const auto& e : planes) os << "  " << std::left << std::setw(16) << e.label << e.value << "\n";
  os << "\nRicci curvature\n";
  for (const auto& e : ric) {
    os << "  " << std::left << std::setw(8) << e.label << "Ric = " << std::setw(24) << e.ricci
       << "directional = " << e.directional << "\n";
  }
  if (!families.empty()) {
    os << "\noscillator plane families\n";
    for (const auto& f : families) {
      os << "  " << std::left << std::setw(18) << f.label << std::setw(8) << f.a << std::setw(24)
         << f.value << (f.matches ? "ok" : "MISMATCH") << "\n";
    }
  }
  if (sup) {
    os << "\nLorentzian planes: " << sup->accepted << " sampled (seed " << sup->seed
       << "), sup K = " << format_double(sup->sup) << "\n";
  }
  return os.str();
}

Output algebra_curvature(const RunConfig& c, std::istream& in) {
  const MetricLieAlgebra alg = load_algebra(c, in);
  const auto planes = coordinate_plane_table(alg, c.exact);
  const auto ric = ricci_table(alg, c.exact);
  std::vector<FamilyEntry> families;
  if (is_oscillator(alg)) {
    families = oscillator_families((alg.dim() - 2) / 2, family_parameters(), c.exact);
  }
  std::optional<LorentzPlaneReport> sup;
  if (c.planes > 0) {
    if (!alg.signature().lorentzian()) {
      throw std::invalid_argument("--planes needs a Lorentzian algebra");
    }
    sup = lorentz_plane_sup(alg, c.planes, c.seed);
  }
  const bool ok = std::all_of(families.begin(), families.end(),
                              [](const FamilyEntry& f) { return f.matches; });
  if (c.table) return {curvature_text(alg, planes, ric, families, sup), ok ? kOk : kViolated};
  json j = {{"command", c.command},
            {"algebra", alg.name()},
            {"exact", c.exact},
            {"sectional_curvature", to_json(planes)},
            {"ricci", to_json(ric)}};
  if (!families.empty()) j["families"] = to_json(families);
  if (sup) j["lorentz_planes"] = to_json(*sup);
  return {dump(j), ok ? kOk : kViolated};
}

Output algebra_report_cmd(const RunConfig& c, std::istream& in) {
  const MetricLieAlgebra alg = load_algebra(c, in);
  const AlgebraReport r = algebra_report(alg);
  json j = {{"command", c.command}, {"report", to_json(r)}};
  if (alg.signature().lorentzian() && c.planes > 0) {
    j["lorentz_planes"] = to_json(lorentz_plane_sup(alg, c.planes, c.seed));
  }
  return {dump(j), r.lemma21.verdict == Verdict::Violated ? kViolated : kOk};
}

Output surface_verify(const RunConfig& c) {
  const ImmersionChart chart = load_immersion(c);
  SurfaceVerifyConfig sc;
  sc.grid = c.grid;
  sc.h = c.h;
  sc.checks = c.lemmas;
  sc.direction = parse_direction(c, chart.ambient());
  sc.convergence = c.convergence;
  const SurfaceReport r = verify_surface(chart, sc);
  json j = to_json(r);
  j["command"] = c.command;
  return {dump(j), r.passed() ? kOk : kViolated};
}

Output theorem_report(const RunConfig& c, std::istream& in) {
  if (!immersion_requested(c)) {
    const MetricLieAlgebra alg = load_algebra(c, in);
    const AlgebraReport r = algebra_report(alg);
    json j = {{"command", c.command},
              {"algebra", alg.name()},
              {"theorems", json::array({to_json(r.lemma21)})}};
    if (alg.signature().lorentzian()) {
      j["lorentz_planes"] = to_json(lorentz_plane_sup(alg, c.planes ? c.planes : 10000, c.seed));
    }
    return {dump(j), r.lemma21.verdict == Verdict::Violated ? kViolated : kOk};
  }
  const ImmersionChart chart = load_immersion(c);
  const HypersurfaceReport r = hypersurface_report(chart, c.grid, c.h,
                                                   parse_direction(c, chart.ambient()),
                                                   c.planes ? c.planes : 2000, c.seed);
  json j = to_json(r);
  j["command"] = c.command;
  j["seed"] = c.seed;
  const bool violated = std::any_of(r.theorems.begin(), r.theorems.end(), [](const auto& t) {
    return t.verdict == Verdict::Violated;
  });
  return {dump(j), violated ? kViolated : kOk};
}

Output catalog_list_cmd() {
  json a = json::array();
  for (const auto& e : catalog::catalog_list()) {
    a.push_back({{"name", e.name}, {"kind", e.kind}, {"params", e.params}, {"example", e.example}});
  }
  return {dump(json{{"command", "catalog-list"}, {"entries", a}}), kOk};
}

Output dispatch(const RunConfig& c, std::istream& in) {
  if (c.command == "algebra-check") return algebra_check(c, in);
  if (c.command == "algebra-curvature") return algebra_curvature(c, in);
  if (c.command == "algebra-report") return algebra_report_cmd(c, in);
  if (c.command == "surface-verify") return surface_verify(c);
  if (c.command == "theorem-report") return theorem_report(c, in);
  if (c.command == "catalog-list") return catalog_list_cmd();
  return {algebra_to_json(load_algebra(c, in)), kOk};  // export
}

void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::invalid_argument("cannot write '" + tmp.string() + "'");
    f << text;
    f.flush();
    if (!f) throw std::invalid_argument("write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    check_config(config);
    const Output o = dispatch(config, in);
    if (config.out.empty()) {
      out << o.text;
    } else {
      write_atomically(config.out, o.text);
    }
    return o.code;
  } catch (const GeometryError& e) {
    err << "liegeo: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "liegeo: " << e.what() << "\n";
  }
  return kUsage;
}

int main_entry(int argc, char** argv) {
  RunConfig c;
  if (const char* env = std::getenv("LIEGEO_TOL")) {
    try {
      std::size_t used = 0;
      c.tol = std::stod(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      std::cerr << "liegeo: LIEGEO_TOL is not a number: " << env << "\n";
      return kUsage;
    }
  }

  CLI::App app{"Curvature and hypersurface checks for Lie groups with bi-invariant metrics",
               "liegeo"};
  app.set_help_flag("--help", "Print this help message and exit");
  std::string commands;
  for (const auto& n : command_names()) commands += (commands.empty() ? "" : ", ") + n;
  app.add_option("command", c.command, "One of: " + commands)->required();
  app.add_option("--input", c.input, "Algebra document (JSON), '-' for stdin");
  app.add_option("--catalog", c.catalog, "Catalog id, e.g. oscillator:m=2");
  app.add_option("--grid", c.grid, "Grid nodes per axis (>= 4)");
  app.add_option("--h", c.h, "Finite-difference step (> 0)");
  app.add_option("--tol", c.tol, "Tolerance for float-mode checks (default $LIEGEO_TOL or 1e-12)");
  app.add_option("--seed", c.seed, "Seed for all sampling");
  app.add_flag("--exact", c.exact, "Exact arithmetic over Q(sqrt 2)");
  app.add_option("--out", c.out, "Output path (written atomically); default stdout");
  app.add_option("--planes", c.planes, "Number of random Lorentzian planes to sample");
  app.add_flag("--table", c.table, "Plain-text table instead of JSON (algebra-curvature)");
  app.add_option("--lemma", c.lemmas, "Checks to run (surface-verify), e.g. all or lemma35")
      ->delimiter(',');
  app.add_option("--direction", c.direction, "Direction X: basis label or coefficients a,b,c");
  bool no_convergence = false;
  app.add_flag("--no-convergence", no_convergence, "Skip the h/2 convergence pass");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  c.convergence = !no_convergence;
  return run(c, std::cin, std::cout, std::cerr);
}

}  // namespace liegeo::cli
