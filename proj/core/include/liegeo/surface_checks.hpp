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

// Grid scans over an immersion chart and the aggregated surface verification.

#include "liegeo/hypersurface.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace liegeo {

/// Uniform tensor grid with `per_axis` nodes per axis covering the whole box.
class Grid {
 public:
  Grid(ParamBox box, std::size_t per_axis);

  const ParamBox& box() const { return box_; }
  std::size_t per_axis() const { return per_axis_; }
  /// Smallest node spacing over the axes.
  double spacing() const;
  std::size_t node_count() const;
  /// Node with multi-index `index` (each entry in [0, per_axis)).
  Vec node(const std::vector<std::size_t>& index) const;

  /// Visits every node; `interior` restricts to indices 1..per_axis-2.
  void for_each(bool interior, const std::function<void(const Vec&)>& fn) const;
  /// Grid with the same resolution over the box shrunk by `factor` about its center.
  Grid shrunk(double factor) const;

 private:
  ParamBox box_;
  std::size_t per_axis_;
};

/// Running min / max / mean with the location of the maximum.
struct ResidualStats {
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();
  double sum = 0;
  double sum_sq = 0;
  std::size_t count = 0;
  Vec argmax;
  Vec argmin;

  void add(double v, const Vec& u);
  double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
  double stddev() const;
  bool empty() const { return count == 0; }
};

enum class CheckStatus { Pass, Fail, Inapplicable, Info };
const char* to_string(CheckStatus s);

struct CheckSummary {
  std::string id;
  CheckStatus status = CheckStatus::Info;
  double tolerance = 0;
  ResidualStats stats;                    // at step h
  std::optional<ResidualStats> half;      // at step h/2 for convergence checks
  std::optional<double> convergence_ratio;
  bool ratio_applicable = false;          // residual above the roundoff floor
  std::string note;
};

struct SurfaceVerifyConfig {
  std::size_t grid = 16;
  double h = 1e-3;
  /// Check ids or "all"; aliases lemma31/lemma32/lemma34/lemma35 are accepted.
  std::vector<std::string> checks{"all"};
  std::optional<Vec> direction;  // defaults to the chart's reference direction
  bool convergence = true;
};

struct SurfaceReport {
  std::string fixture;
  std::string algebra;
  std::size_t grid = 0;
  double h = 0;
  std::vector<CheckSummary> checks;

  bool passed() const;
  const CheckSummary* find(const std::string& id) const;
};

/// Every check id understood by verify_surface, in report order.
const std::vector<std::string>& surface_check_ids();

/**
 * Runs the requested residual checks on the interior nodes of a grid. The three
 * differencing checks (grad, gradnorm, laplacian) are repeated at h/2; their ratio
 * must lie in [3.5, 4.5] whenever the residual at h is above the roundoff floor
 * 64 eps / h^k (k = 1 for gradients, 2 for the Laplacian).
 */
SurfaceReport verify_surface(const ImmersionChart& chart, const SurfaceVerifyConfig& config);

/// Roundoff floor below which convergence ratios are not meaningful.
double roundoff_floor(double h, int derivative_order);

struct TransversalityReport {
  double min_abs = 0;
  double min_value = 0;
  double max_value = 0;
  std::size_t sign_changes = 0;  // grid edges whose end points differ in sign
  bool transversal = false;
  bool sampled_only = true;
};

/// Sign behaviour of f_X over all grid nodes (a sampled, not global, statement).
TransversalityReport transversality_scan(const ImmersionChart& chart, const Vec& x,
                                         const Grid& grid, double tol = 1e-10);

}  // namespace liegeo
