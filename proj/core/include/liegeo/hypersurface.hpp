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

// Extrinsic geometry of hypersurfaces in a Lie group with a bi-invariant metric.
//
// Everything is left-trivialized: a chart supplies, for each parameter point u, the
// tangent vectors T_k(u) = dL_{phi(u)^-1} d_k phi(u) as coefficient vectors in the
// orthonormal basis of the Lie algebra. The normal, its derivatives and the support
// functions then live in the algebra as well, and the connection term of the ambient
// derivative is exact: nabla_{d_k} N = d_k eta + 1/2 [T_k, eta].

#include "liegeo/algebra.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace liegeo {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Floating-point view of an algebra with dense structure constants.
class FloatAmbient {
 public:
  FloatAmbient() = default;
  explicit FloatAmbient(const MetricLieAlgebra& alg);

  std::size_t dim() const { return n_; }
  const Vec& eps() const { return eps_; }
  bool lorentzian() const { return lorentzian_; }
  double c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }

  double inner(const Vec& a, const Vec& b) const;
  Vec bracket(const Vec& a, const Vec& b) const;
  /// Killing matrix B_ab.
  const Mat& killing() const { return killing_; }
  /// Ric(v,v) = -1/4 B(v,v).
  double ricci(const Vec& v) const { return -0.25 * v.dot(killing_ * v); }

 private:
  std::size_t n_ = 0;
  bool lorentzian_ = false;
  Vec eps_;
  std::vector<double> c_;
  std::vector<StructureEntry<double>> entries_;
  Mat killing_;
};

/// Axis-aligned parameter box.
struct ParamBox {
  Vec lo;
  Vec hi;

  std::size_t dim() const { return static_cast<std::size_t>(lo.size()); }
  Vec center() const { return (lo + hi) / 2; }
  bool contains(const Vec& u, double slack = 1e-12) const;
};

/// (n+1) x n matrix whose column k is T_k(u).
using FrameFunction = std::function<Mat(const Vec& u)>;

struct ChartInfo {
  std::string fixture;               // catalog id that produced the chart
  bool compact = false;              // the immersed hypersurface is compact
  bool complete = false;             // complete induced metric
  std::optional<Vec> reference;      // designated direction X (unit), e.g. time or center
  std::string reference_label;
};

/**
 * @brief A parametric hypersurface given by left-trivialized frames over a box.
 *
 * The unit normal is the generalized cross product of the frame, normalized and
 * signed once so that <eta(center), anchor> > 0. Being a continuous function of the
 * frame, this sign choice propagates over the whole domain. For a Lorentzian ambient
 * the normal must additionally satisfy f_X < 0 against the reference direction;
 * violations raise OrientationConflict.
 *
 * Construction checks rank, spacelike metric, the anchor and the Maurer-Cartan
 * compatibility d_k T_l - d_l T_k + [T_k, T_l] = 0 on a small sample of points.
 */
class ImmersionChart {
 public:
  ImmersionChart(std::string name, const MetricLieAlgebra& ambient, ParamBox domain,
                 FrameFunction frame, Vec anchor, ChartInfo info = {});

  const std::string& name() const { return name_; }
  const MetricLieAlgebra& ambient() const { return ambient_; }
  const FloatAmbient& ops() const { return ops_; }
  const ParamBox& domain() const { return domain_; }
  const ChartInfo& info() const { return info_; }
  const Vec& anchor() const { return anchor_; }
  /// Hypersurface dimension n.
  std::size_t dim() const { return domain_.dim(); }
  /// +1 Riemannian, -1 Lorentzian.
  int eps_normal() const { return ops_.lorentzian() ? -1 : 1; }

  /// Frame at u; throws DomainViolation outside the parameter box.
  Mat frame(const Vec& u) const;
  /// Unit normal eta(u) (coefficients in the orthonormal algebra basis).
  Vec normal(const Vec& u) const;
  /// Normal together with the frame it was computed from.
  Vec normal(const Vec& u, const Mat& frame) const;
  /// max_{k<l} |d_k T_l - d_l T_k + [T_k, T_l]| with central differences of step h.
  double maurer_cartan_defect(const Vec& u, double h) const;

 private:
  std::string name_;
  MetricLieAlgebra ambient_;
  FloatAmbient ops_;
  ParamBox domain_;
  FrameFunction frame_;
  Vec anchor_;
  ChartInfo info_;
  double sign_ = 1.0;
  bool oriented_ = false;
};

/// Per-point extrinsic data.
struct PointData {
  Vec u;
  Mat frame;        // T_k as columns
  Mat metric;       // g_kl = <T_k, T_l>
  Mat metric_inv;
  Mat orth_frame;   // orthonormal tangent frame e = T L^-T with g = L L^T
  Vec normal;       // eta
  int eps_normal = 1;
  Mat normal_derivative;  // column k: d_k eta
  Mat second_form;  // b_mk = -<T_m, nabla_k N>
  Mat shape_chart;  // A in chart coordinates, g^-1 b
  Mat shape;        // A in the orthonormal frame e
  double mean_curvature = 0;  // H = eps_N tr A
  double a_norm_sq = 0;       // |A|^2
  double ric_normal = 0;      // Ric(N,N)

  /// f_i = <N, X_i> = eps_i eta_i.
  Vec supports(const FloatAmbient& ops) const { return ops.eps().cwiseProduct(normal); }
  /// Chart coordinates of the tangential part X^T = X - eps_N <X,N> N.
  Vec tangent_coords(const FloatAmbient& ops, const Vec& x) const;
};

/**
 * Point data at u. Derivatives of eta use the fourth-order central stencil with step h
 * (reach 2h), and the connection term is exact.
 */
PointData point_data(const ImmersionChart& chart, const Vec& u, double h);

struct LemmaResidual;
struct GaussDuality;
struct GradientBound;
struct Homothety;

/**
 * @brief Evaluates every per-point quantity at one parameter point u with step h.
 *
 * All finite differences sample the lattice u + h Z^n, so frames and normals are
 * cached by integer offset and shared between checks. The free functions below are
 * thin wrappers that build a fresh evaluator.
 */
class PointEvaluator {
 public:
  PointEvaluator(const ImmersionChart& chart, Vec u, double h);

  const ImmersionChart& chart() const { return chart_; }
  const Vec& u() const { return u_; }
  double step() const { return h_; }

  const PointData& data();
  /// Second-order central differences d_k eta (column k).
  const Mat& normal_gradient();
  /// Component-wise Laplace-Beltrami of eta.
  const Vec& laplacian_normal();

  std::vector<LemmaResidual> gradient();
  std::vector<LemmaResidual> gradnorm();
  std::vector<LemmaResidual> laplacian();
  GaussDuality duality();
  GradientBound gradient_bound(const Vec& x);
  LemmaResidual jacobi(const Vec& x);
  Homothety homothety(double umbilic_tol);

 private:
  static constexpr std::size_t kMaxDim = 8;
  using Offset = std::array<int, kMaxDim>;
  struct Node {
    Mat frame;
    Vec normal;
  };

  const Node& node(const Offset& off);
  Vec point(const Offset& off) const;
  PointData data_at(const Offset& off);
  double mean_curvature_at(const Offset& off);
  Mat derivative4(const Offset& off);
  Mat derivative2(const Offset& off);

  const ImmersionChart& chart_;
  Vec u_;
  double h_;
  std::map<std::int64_t, Node> cache_;
  std::optional<PointData> data_;
  std::optional<Mat> gradient_;
  std::optional<Vec> laplacian_;
};

/// f_X = <eta, X>.
double support_function(const FloatAmbient& ops, const PointData& pd, const Vec& x);

/// Gauss map value: in left-trivialized form it is the normal itself.
inline const Vec& gauss_map(const PointData& pd) { return pd.normal; }

/// n minus the numerical rank of A (singular values below max(tol * largest, floor)).
std::size_t gauss_nullity(const PointData& pd, double tol = 1e-8, double floor = 1e-8);

// --- residual checks ---------------------------------------------------------

struct LemmaResidual {
  std::string lemma_id;
  double value = 0;
  double step = 0;
  Vec u;
  double lhs = 0;  // scalar sides where meaningful
  double rhs = 0;
};

/// Sum_{i,j} c_jl^i eps_j f_i f_j for one index l.
double lemma31_identity(const FloatAmbient& ops, const PointData& pd, std::size_t l);
/// Maximum of |lemma31_identity| over l.
double lemma31_max(const FloatAmbient& ops, const PointData& pd);

/// Gradient identity for f_j, for all j at once (index j in the result).
std::vector<LemmaResidual> lemma32_gradient_all(const ImmersionChart& chart, const Vec& u, double h);
LemmaResidual lemma32_gradient_check(const ImmersionChart& chart, const Vec& u, std::size_t j,
                                     double h);

std::vector<LemmaResidual> lemma34_gradnorm_all(const ImmersionChart& chart, const Vec& u, double h);
LemmaResidual lemma34_gradnorm_check(const ImmersionChart& chart, const Vec& u, std::size_t j,
                                     double h);

std::vector<LemmaResidual> lemma35_laplacian_all(const ImmersionChart& chart, const Vec& u,
                                                 double h);
LemmaResidual lemma35_laplacian_check(const ImmersionChart& chart, const Vec& u, std::size_t j,
                                      double h);

/// Laplace-Beltrami of f_X = <eta, X> with nested central differences (reach 2h).
double laplacian_support(const ImmersionChart& chart, const Vec& u, const Vec& x, double h);
/// Chart gradient d_k f_X by central differences.
Vec chart_gradient_support(const ImmersionChart& chart, const Vec& u, const Vec& x, double h);

struct GaussDuality {
  double raw = 0;        // max |<e_l, d_{e_k} eta> + A_lk|
  double corrected = 0;  // same with the connection term 1/2 [e_k, eta] added
};

/// Compares the differential of u -> eta(u) with -A in the orthonormal frame.
GaussDuality gauss_duality(const ImmersionChart& chart, const Vec& u, double h);

struct ProjectionIdentity {
  double pi_norm_sq = 0;       // |pi_X(eta)|^2
  double one_minus_fx_sq = 0;  // 1 - f_X^2
  double tangent_norm_sq = 0;  // |X^T|^2
  double residual = 0;
};

/// Requires a Riemannian ambient and |X| = 1.
ProjectionIdentity projection_identity_check(const FloatAmbient& ops, const PointData& pd,
                                             const Vec& x);

/**
 * Pointwise gradient-bound chain for f_X in a Riemannian ambient, in an orthonormal
 * basis with X last:
 *   L0 = |grad f_X|                                (finite differences)
 *   L1 = sqrt of the squared-gradient identity     (point data)
 *   L2 = |A||X^T| + 1/2 kappa n S,  S = sum_{i<=n} |f'_i|
 *   L3 = (|A| + 1/2 kappa n^{3/2}) |pi_X(eta)|  = C |pi_X(eta)|
 * with kappa = max |c'_{l,n+1}^i|.
 */
struct GradientBound {
  double l0 = 0;
  double l1 = 0;
  double l2 = 0;
  double l3 = 0;
  double kappa = 0;
  double constant = 0;  // C = |A| + 1/2 kappa n^{3/2}
  double pi_norm = 0;
  double slack = 0;     // l3 - l0
};

GradientBound gradient_bound_check(const ImmersionChart& chart, const Vec& u, const Vec& x,
                                   double h);

/// |Delta f_X + (Ric(N,N) + |A|^2) f_X|; Riemannian ambient.
LemmaResidual jacobi_residual(const ImmersionChart& chart, const Vec& u, const Vec& x, double h);

struct Umbilicity {
  double h_squared = 0;
  double ric_normal = 0;
  double threshold = 0;  // H^2 + n Ric(N,N)
  double defect = 0;     // |A - (tr A / n) I|_F
  double gap = 0;        // |A|^2 - H^2 / n
};

/// Lorentzian ambient only.
Umbilicity umbilicity_and_threshold(const ImmersionChart& chart, const PointData& pd);

struct Homothety {
  double expected_factor = 0;  // (H/n)^2
  double fitted_factor = 0;    // tr(G g^-1) / n
  double deviation = 0;        // |G - (H/n)^2 g|_F / |(H/n)^2 g|_F
};

/**
 * Pullback G_kl = <d_k eta, d_l eta> of the ambient product under the Gauss map,
 * compared with (H/n)^2 g. Lorentzian ambient, umbilical point with H != 0.
 */
Homothety homothety_at(const ImmersionChart& chart, const Vec& u, double h,
                       double umbilic_tol = 1e-6);

/// Ric(N,N) = -1/4 B(eta, eta).
inline double ricci_in_normal_direction(const FloatAmbient& ops, const PointData& pd) {
  return ops.ricci(pd.normal);
}

}  // namespace liegeo
