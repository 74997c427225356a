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

#pragma once

// Named theorem predicates assembled from algebra- and hypersurface-level checks.
// Global hypotheses (compactness, completeness, integrability, infima) are never
// inferred: they come from chart metadata or from sample statistics, and are tagged.

#include "liegeo/algebra.hpp"
#include "liegeo/check_report.hpp"
#include "liegeo/structure.hpp"
#include "liegeo/surface_checks.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liegeo {

enum class Verdict { Consistent, Violated, Inapplicable };
const char* to_string(Verdict v);

/// How a predicate was established.
enum class Evidence { Exact, Sampled, SampledOnly, Metadata };
const char* to_string(Evidence e);

struct Predicate {
  std::string name;
  Evidence evidence = Evidence::Exact;
  bool holds = true;
  std::optional<double> value;
  std::optional<double> tolerance;
  std::optional<Vec> location;
  std::string detail;
};

struct TheoremReport {
  std::string theorem_id;  // T41, T42, T43, T44, T51, T54, L21, L53
  std::string subject;
  std::vector<Predicate> hypotheses;
  std::vector<Predicate> conclusions;
  std::vector<Predicate> diagnostics;  // reported without pass/fail
  Verdict verdict = Verdict::Inapplicable;
  std::optional<Predicate> witness;    // set exactly when verdict == Violated

  /// Inapplicable if a hypothesis fails, else Violated if a conclusion fails.
  void decide();
};

// --- algebra level -----------------------------------------------------------

struct EinsteinCheck {
  bool einstein = false;
  std::optional<ExactScalar> lambda;  // Ric = lambda <.,.>
};

EinsteinCheck einstein_check(const MetricLieAlgebra& alg);

struct AlgebraReport {
  std::string algebra;
  CheckReport validation;
  SubspaceBasis center;
  SemisimplicityCertificate semisimplicity;
  std::optional<Codim1Subalgebra> codim1;
  EinsteinCheck einstein;
  TheoremReport lemma21;
};

/// Bundles validation, center, Cartan's criterion, codim-1 subalgebra and Einstein data.
AlgebraReport algebra_report(const MetricLieAlgebra& alg);

struct CurvatureEntry {
  std::string label;
  std::string value;  // exact text or shortest decimal
  double numeric = 0;
  bool defined = true;
};

/// Sectional curvatures of all coordinate planes (i < j).
std::vector<CurvatureEntry> coordinate_plane_table(const MetricLieAlgebra& alg, bool exact);

struct RicciEntry {
  std::string label;
  std::string ricci;        // Ric(e_i, e_i)
  std::string directional;  // Ric(e_i, e_i) / <e_i, e_i>
};

std::vector<RicciEntry> ricci_table(const MetricLieAlgebra& alg, bool exact);

struct FamilyEntry {
  std::string label;        // e.g. "K(aV+U,X1)"
  std::string a;            // parameter text, empty for fixed planes
  std::string value;        // computed K
  std::string closed_form;  // closed-form value
  bool matches = false;
};

/**
 * The five oscillator plane families for a in `params` (the last one over all
 * pairs X_i, Y_j), computed with sectional_curvature and compared with their closed forms.
 */
std::vector<FamilyEntry> oscillator_families(std::size_t m, const std::vector<Rational>& params,
                                             bool exact);

struct LorentzPlaneReport {
  std::size_t samples = 0;
  std::size_t accepted = 0;
  std::size_t rejected = 0;  // null brackets or degenerate completions
  std::uint64_t seed = 0;
  double sup = 0;
  Vec argmax_t;
  Vec argmax_w;
  /// Oscillator only: largest closed-form family value over a = +-3/2, +-2, +-10.
  std::optional<double> family_sup;
};

/**
 * Samples Lorentzian planes span{t, w}: t on the unit hyperboloid with spatial part
 * uniform in [-3, 3]^n, w a normalized Gaussian vector projected onto t-perp. Sample i
 * draws from its own splitmix64 stream, so the sampled supremum is nondecreasing in
 * the sample count for a fixed seed.
 */
LorentzPlaneReport lorentz_plane_sup(const MetricLieAlgebra& alg, std::size_t samples,
                                     std::uint64_t seed);

// --- hypersurface level ------------------------------------------------------

struct HypersurfaceScan {
  std::size_t nodes = 0;
  ResidualStats mean_curvature;
  ResidualStats shape_norm;      // |A| (Frobenius)
  ResidualStats ric_normal;
  ResidualStats support;         // f_X on interior nodes
  ResidualStats nullity;
  ResidualStats pi_norm;         // |pi_X(eta)|
  ResidualStats jacobi;          // Riemannian only
  ResidualStats gradient_slack;  // Riemannian only
  ResidualStats threshold;       // Lorentzian only
  ResidualStats umbilic_defect;  // Lorentzian only
  ResidualStats umbilic_gap;     // Lorentzian only
  ResidualStats homothety;       // Lorentzian only, when the precondition holds
  ResidualStats homothety_factor;
  std::string homothety_note;
  double great_sphere_fraction = 0;
  TransversalityReport transversality;       // all nodes of the grid
  TransversalityReport transversality_half;  // grid shrunk by 1/2
};

HypersurfaceScan scan_hypersurface(const ImmersionChart& chart, std::size_t grid, double h,
                                   const Vec& x);

struct HypersurfaceReport {
  std::string fixture;
  std::string algebra;
  std::size_t grid = 0;
  double h = 0;
  Vec direction;
  std::string direction_label;
  HypersurfaceScan scan;
  std::vector<TheoremReport> theorems;
};

/**
 * Evaluates T41, T42, T43, T44, T51, L53 and T54 on one fixture. `x` defaults to the
 * chart's reference direction; `plane_samples` and `seed` drive the Lorentzian-plane
 * curvature bound used by T54.
 */
HypersurfaceReport hypersurface_report(const ImmersionChart& chart, std::size_t grid, double h,
                                       std::optional<Vec> x = std::nullopt,
                                       std::size_t plane_samples = 2000, std::uint64_t seed = 0);

}  // namespace liegeo
