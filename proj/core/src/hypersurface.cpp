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

#include "liegeo/hypersurface.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace liegeo {

// --- FloatAmbient ------------------------------------------------------------

FloatAmbient::FloatAmbient(const MetricLieAlgebra& alg)
    : n_(alg.dim()),
      lorentzian_(alg.signature().lorentzian()),
      eps_(static_cast<Eigen::Index>(alg.dim())),
      c_(alg.dim() * alg.dim() * alg.dim(), 0.0),
      entries_(alg.entries<double>()) {
  for (std::size_t i = 0; i < n_; ++i) eps_[static_cast<Eigen::Index>(i)] = alg.eps(i);
  for (const auto& e : entries_) c_[(e.i * n_ + e.j) * n_ + e.k] = e.value;
  const Matrix<double> b = killing_matrix<double>(alg);
  killing_ = Mat(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) killing_(i, j) = b(i, j);
  }
}

double FloatAmbient::inner(const Vec& a, const Vec& b) const {
  return (eps_.array() * a.array() * b.array()).sum();
}

Vec FloatAmbient::bracket(const Vec& a, const Vec& b) const {
  Vec out = Vec::Zero(static_cast<Eigen::Index>(n_));
  for (const auto& e : entries_) {
    out[e.k] += a[e.i] * b[e.j] * e.value;
  }
  return out;
}

// --- ParamBox ----------------------------------------------------------------

bool ParamBox::contains(const Vec& u, double slack) const {
  if (u.size() != lo.size()) return false;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    const double pad = slack * std::max(1.0, hi[i] - lo[i]);
    if (!(u[i] >= lo[i] - pad && u[i] <= hi[i] + pad)) return false;
  }
  return true;
}

namespace {

std::string point_text(const Vec& u) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < u.size(); ++i) os << (i ? "," : "") << u[i];
  os << ")";
  return os.str();
}

Vec unit(Eigen::Index n, Eigen::Index k) {
  Vec e = Vec::Zero(n);
  e[k] = 1.0;
  return e;
}

// w_i = (-1)^i det(T without row i): Euclidean-orthogonal to every column of T.
Vec cross_product(const Mat& t) {
  const Eigen::Index rows = t.rows();
  const Eigen::Index n = t.cols();
  Vec w(rows);
  Mat minor(n, n);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index r = 0, m = 0; r < rows; ++r) {
      if (r == i) continue;
      minor.row(m++) = t.row(r);
    }
    double d = 1.0;
    if (n == 1) {
      d = minor(0, 0);
    } else if (n == 2) {
      d = minor(0, 0) * minor(1, 1) - minor(0, 1) * minor(1, 0);
    } else if (n == 3) {
      d = minor(0, 0) * (minor(1, 1) * minor(2, 2) - minor(1, 2) * minor(2, 1)) -
          minor(0, 1) * (minor(1, 0) * minor(2, 2) - minor(1, 2) * minor(2, 0)) +
          minor(0, 2) * (minor(1, 0) * minor(2, 1) - minor(1, 1) * minor(2, 0));
    } else if (n > 3) {
      d = minor.determinant();
    }
    w[i] = (i % 2 == 0) ? d : -d;
  }
  return w;
}

}  // namespace

// --- ImmersionChart ----------------------------------------------------------

ImmersionChart::ImmersionChart(std::string name, const MetricLieAlgebra& ambient, ParamBox domain,
                               FrameFunction frame_fn, Vec anchor, ChartInfo info)
    : name_(std::move(name)),
      ambient_(ambient),
      ops_(ambient),
      domain_(std::move(domain)),
      frame_(std::move(frame_fn)),
      anchor_(std::move(anchor)),
      info_(std::move(info)) {
  const std::size_t n = domain_.dim();
  if (n + 1 != ambient_.dim() || domain_.hi.size() != domain_.lo.size()) {
    throw GeometryError(ErrorKind::DimensionMismatch,
                        name_ + ": parameter box of dimension " + std::to_string(n) +
                            " does not fit an ambient of dimension " +
                            std::to_string(ambient_.dim()));
  }
  if ((domain_.hi - domain_.lo).minCoeff() <= 0) {
    throw GeometryError(ErrorKind::InvalidParameter, name_ + ": empty parameter box");
  }
  if (static_cast<std::size_t>(anchor_.size()) != ambient_.dim()) {
    throw GeometryError(ErrorKind::DimensionMismatch, name_ + ": anchor has the wrong length");
  }
  if (ops_.lorentzian() && !info_.reference) {
    throw GeometryError(ErrorKind::InvalidParameter,
                        name_ + ": a Lorentzian chart needs a timelike reference direction");
  }
  if (info_.reference && static_cast<std::size_t>(info_.reference->size()) != ambient_.dim()) {
    throw GeometryError(ErrorKind::DimensionMismatch, name_ + ": reference has the wrong length");
  }

  const Vec c = domain_.center();
  sign_ = 1.0;
  const Vec raw = normal(c, frame(c));
  const double along = ops_.inner(raw, anchor_);
  if (std::abs(along) < 1e-12) {
    throw GeometryError(ErrorKind::OrientationConflict,
                        name_ + ": anchor is tangent at the domain center");
  }
  sign_ = along > 0 ? 1.0 : -1.0;
  oriented_ = true;
  (void)normal(c);  // re-run the time-orientation check with the final sign

  // Maurer-Cartan compatibility on the center and 2^n interior points.
  const double step = 1e-4;
  std::vector<Vec> samples{c};
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Vec p = c;
    for (std::size_t k = 0; k < n; ++k) {
      const Eigen::Index kk = static_cast<Eigen::Index>(k);
      const double quarter = 0.25 * (domain_.hi[kk] - domain_.lo[kk]);
      p[kk] += ((mask >> k) & 1U) ? quarter : -quarter;
    }
    samples.push_back(p);
  }
  for (const Vec& p : samples) {
    const double defect = maurer_cartan_defect(p, step);
    if (defect > 1e-6) {
      throw GeometryError(ErrorKind::InvalidParameter,
                          name_ + ": frames violate Maurer-Cartan compatibility at " +
                              point_text(p) + " (defect " + std::to_string(defect) + ")");
    }
  }
}

Mat ImmersionChart::frame(const Vec& u) const {
  if (!domain_.contains(u)) {
    throw GeometryError(ErrorKind::DomainViolation,
                        name_ + ": parameter point " + point_text(u) + " lies outside the domain");
  }
  Mat t = frame_(u);
  if (static_cast<std::size_t>(t.rows()) != ambient_.dim() ||
      static_cast<std::size_t>(t.cols()) != dim()) {
    throw GeometryError(ErrorKind::DimensionMismatch, name_ + ": frame function has the wrong shape");
  }
  return t;
}

Vec ImmersionChart::normal(const Vec& u) const { return normal(u, frame(u)); }

Vec ImmersionChart::normal(const Vec& u, const Mat& t) const {
  const Vec w = cross_product(t);
  double scale = 1.0;
  for (Eigen::Index k = 0; k < t.cols(); ++k) scale *= t.col(k).norm();
  if (w.norm() <= 1e-12 * scale) {
    throw GeometryError(ErrorKind::RankDeficientFrame,
                        name_ + ": frame is rank deficient at " + point_text(u));
  }
  const Vec eta = ops_.eps().cwiseProduct(w);
  const double q = ops_.inner(eta, eta);
  const double eps_n = ops_.lorentzian() ? -1.0 : 1.0;
  if (q * eps_n <= 1e-14 * w.squaredNorm()) {
    throw GeometryError(ErrorKind::NonSpacelike,
                        name_ + ": induced metric is not Riemannian at " + point_text(u));
  }
  Vec out = (sign_ / std::sqrt(std::abs(q))) * eta;
  if (oriented_ && ops_.lorentzian() && ops_.inner(out, *info_.reference) >= 0) {
    throw GeometryError(ErrorKind::OrientationConflict,
                        name_ + ": normal orientation from the anchor gives f_X >= 0 at " +
                            point_text(u));
  }
  return out;
}

double ImmersionChart::maurer_cartan_defect(const Vec& u, double h) const {
  const std::size_t n = dim();
  std::vector<Mat> dt;
  for (std::size_t k = 0; k < n; ++k) {
    const Vec e = h * unit(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k));
    dt.push_back((frame(u + e) - frame(u - e)) / (2 * h));
  }
  const Mat t = frame(u);
  double worst = 0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      const auto kk = static_cast<Eigen::Index>(k);
      const auto ll = static_cast<Eigen::Index>(l);
      const Vec r = dt[k].col(ll) - dt[l].col(kk) + ops_.bracket(t.col(kk), t.col(ll));
      worst = std::max(worst, r.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

// --- point evaluation --------------------------------------------------------

namespace {

struct Metric {
  Mat g;
  Mat g_inv;
  Mat l;  // g = l l^T
  double sqrt_det = 0;
};

Metric induced_metric(const ImmersionChart& chart, const Mat& t, const Vec& u) {
  Metric m;
  m.g = t.transpose() * chart.ops().eps().asDiagonal() * t;
  Eigen::LLT<Mat> llt(m.g);
  if (llt.info() != Eigen::Success) {
    throw GeometryError(ErrorKind::NonSpacelike,
                        chart.name() + ": induced metric is not positive definite at " +
                            point_text(u));
  }
  m.l = llt.matrixL();
  m.g_inv = llt.solve(Mat::Identity(m.g.rows(), m.g.cols()));
  m.sqrt_det = m.l.diagonal().prod();
  return m;
}

void require_riemannian(const FloatAmbient& ops, const char* what) {
  if (ops.lorentzian()) {
    throw GeometryError(ErrorKind::PreconditionFailed,
                        std::string(what) + ": requires a Riemannian ambient");
  }
}

void require_unit(const FloatAmbient& ops, const Vec& x, const char* what) {
  if (static_cast<std::size_t>(x.size()) != ops.dim()) {
    throw GeometryError(ErrorKind::DimensionMismatch, std::string(what) + ": wrong vector length");
  }
  if (std::abs(ops.inner(x, x) - 1.0) > 1e-12) {
    throw GeometryError(ErrorKind::InvalidParameter, std::string(what) + ": X must be a unit vector");
  }
}

// s_l = sum_i c_lj^i f_i for the given j.
Vec structure_contraction(const FloatAmbient& ops, const Vec& f, std::size_t j) {
  const std::size_t dim = ops.dim();
  Vec s = Vec::Zero(static_cast<Eigen::Index>(dim));
  for (std::size_t l = 0; l < dim; ++l) {
    for (std::size_t i = 0; i < dim; ++i) {
      s[static_cast<Eigen::Index>(l)] += ops.c(l, j, i) * f[static_cast<Eigen::Index>(i)];
    }
  }
  return s;
}

// Right side of the squared-gradient identity: a = A X^T in chart coordinates and
// s_l the structure contraction, both taken in the same orthonormal basis X_l.
double gradnorm_rhs(const FloatAmbient& ops, const PointData& pd, const Vec& a, const Vec& s,
                    const Mat& basis) {
  const Vec ta = pd.frame * a;
  const double a_sq = a.dot(pd.metric * a);
  double mixed = 0;
  double last = 0;
  for (Eigen::Index l = 0; l < s.size(); ++l) {
    // <X_l^T, A X^T> = <X_l, A X^T>; the eps_l of the formula cancels against it.
    mixed += s[l] * ops.eps()[l] * ops.inner(basis.col(l), ta);
    last += ops.eps()[l] * s[l] * s[l];
  }
  return a_sq - mixed + 0.25 * last;
}

}  // namespace

Vec PointData::tangent_coords(const FloatAmbient& ops, const Vec& x) const {
  return metric_inv * (frame.transpose() * ops.eps().cwiseProduct(x));
}

PointEvaluator::PointEvaluator(const ImmersionChart& chart, Vec u, double h)
    : chart_(chart), u_(std::move(u)), h_(h) {
  if (!(h_ > 0)) throw GeometryError(ErrorKind::InvalidParameter, "step h must be > 0");
  if (chart_.dim() > kMaxDim) {
    throw GeometryError(ErrorKind::InvalidParameter, "hypersurface dimension above 8");
  }
  if (static_cast<std::size_t>(u_.size()) != chart_.dim()) {
    throw GeometryError(ErrorKind::DimensionMismatch, "parameter point has the wrong length");
  }
}

Vec PointEvaluator::point(const Offset& off) const {
  Vec p = u_;
  for (Eigen::Index k = 0; k < p.size(); ++k) p[k] += h_ * off[static_cast<std::size_t>(k)];
  return p;
}

const PointEvaluator::Node& PointEvaluator::node(const Offset& off) {
  std::int64_t key = 0;
  for (std::size_t k = 0; k < chart_.dim(); ++k) key = key * 32 + (off[k] + 16);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const Vec p = point(off);
  Node n;
  n.frame = chart_.frame(p);
  n.normal = chart_.normal(p, n.frame);
  return cache_.emplace(key, std::move(n)).first->second;
}

Mat PointEvaluator::derivative4(const Offset& off) {
  const auto n = static_cast<Eigen::Index>(chart_.dim());
  Mat d(chart_.ambient().dim(), n);
  for (Eigen::Index k = 0; k < n; ++k) {
    auto at = [&](int s) {
      Offset o = off;
      o[static_cast<std::size_t>(k)] += s;
      return node(o).normal;
    };
    d.col(k) = (-at(2) + 8 * at(1) - 8 * at(-1) + at(-2)) / (12 * h_);
  }
  return d;
}

Mat PointEvaluator::derivative2(const Offset& off) {
  const auto n = static_cast<Eigen::Index>(chart_.dim());
  Mat d(chart_.ambient().dim(), n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Offset plus = off;
    Offset minus = off;
    plus[static_cast<std::size_t>(k)] += 1;
    minus[static_cast<std::size_t>(k)] -= 1;
    d.col(k) = (node(plus).normal - node(minus).normal) / (2 * h_);
  }
  return d;
}

PointData PointEvaluator::data_at(const Offset& off) {
  const FloatAmbient& ops = chart_.ops();
  const Node& here = node(off);
  PointData pd;
  pd.u = point(off);
  pd.frame = here.frame;
  pd.normal = here.normal;
  const Metric m = induced_metric(chart_, pd.frame, pd.u);
  pd.metric = m.g;
  pd.metric_inv = m.g_inv;
  const Mat l_inv =
      m.l.triangularView<Eigen::Lower>().solve(Mat::Identity(m.g.rows(), m.g.cols()));
  pd.orth_frame = pd.frame * l_inv.transpose();
  pd.eps_normal = chart_.eps_normal();
  pd.normal_derivative = derivative4(off);

  const auto n = static_cast<Eigen::Index>(chart_.dim());
  Mat nabla(pd.normal_derivative.rows(), n);
  for (Eigen::Index k = 0; k < n; ++k) {
    nabla.col(k) = pd.normal_derivative.col(k) + 0.5 * ops.bracket(pd.frame.col(k), pd.normal);
  }
  pd.second_form = -(pd.frame.transpose() * ops.eps().asDiagonal() * nabla);
  pd.shape_chart = pd.metric_inv * pd.second_form;
  pd.shape = l_inv * pd.second_form * l_inv.transpose();
  pd.mean_curvature = pd.eps_normal * pd.shape.trace();
  pd.a_norm_sq = pd.shape.squaredNorm();
  pd.ric_normal = ops.ricci(pd.normal);
  return pd;
}

double PointEvaluator::mean_curvature_at(const Offset& off) {
  // Second-order derivatives suffice here: H is only differenced once more.
  const FloatAmbient& ops = chart_.ops();
  const Node& here = node(off);
  const Metric m = induced_metric(chart_, here.frame, point(off));
  const Mat d = derivative2(off);
  Mat nabla(d.rows(), d.cols());
  for (Eigen::Index k = 0; k < d.cols(); ++k) {
    nabla.col(k) = d.col(k) + 0.5 * ops.bracket(here.frame.col(k), here.normal);
  }
  const Mat b = -(here.frame.transpose() * ops.eps().asDiagonal() * nabla);
  return chart_.eps_normal() * (m.g_inv * b).trace();
}

const PointData& PointEvaluator::data() {
  if (!data_) data_ = data_at(Offset{});
  return *data_;
}

const Mat& PointEvaluator::normal_gradient() {
  if (!gradient_) gradient_ = derivative2(Offset{});
  return *gradient_;
}

const Vec& PointEvaluator::laplacian_normal() {
  if (laplacian_) return *laplacian_;
  // (1/sqrt g) d_k (sqrt g g^kl d_l eta), nested central differences (reach 2h).
  const auto n = static_cast<Eigen::Index>(chart_.dim());
  const Metric centre = induced_metric(chart_, node(Offset{}).frame, u_);
  Vec acc = Vec::Zero(static_cast<Eigen::Index>(chart_.ambient().dim()));
  for (Eigen::Index k = 0; k < n; ++k) {
    for (int s : {1, -1}) {
      Offset o{};
      o[static_cast<std::size_t>(k)] = s;
      const Metric m = induced_metric(chart_, node(o).frame, point(o));
      const Mat grad = derivative2(o);
      acc += s * m.sqrt_det * (grad * m.g_inv.row(k).transpose());
    }
  }
  laplacian_ = acc / (2 * h_ * centre.sqrt_det);
  return *laplacian_;
}

std::vector<LemmaResidual> PointEvaluator::gradient() {
  const FloatAmbient& ops = chart_.ops();
  const PointData& pd = data();
  const Vec f = pd.supports(ops);
  const Mat df = ops.eps().asDiagonal() * normal_gradient();
  const auto dim = static_cast<Eigen::Index>(ops.dim());
  std::vector<LemmaResidual> out;
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Vec lhs = pd.metric_inv * df.row(j).transpose();
    const Vec x = pd.tangent_coords(ops, unit(dim, j));
    const Vec s = structure_contraction(ops, f, static_cast<std::size_t>(j));
    const Vec kappa = 0.5 * ops.eps().cwiseProduct(s);
    const Vec rhs = -pd.shape_chart * x + pd.tangent_coords(ops, kappa);
    const Vec diff = lhs - rhs;
    LemmaResidual r;
    r.lemma_id = "grad";
    r.value = std::sqrt(std::max(0.0, diff.dot(pd.metric * diff)));
    r.step = h_;
    r.u = u_;
    r.lhs = std::sqrt(std::max(0.0, lhs.dot(pd.metric * lhs)));
    r.rhs = std::sqrt(std::max(0.0, rhs.dot(pd.metric * rhs)));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<LemmaResidual> PointEvaluator::gradnorm() {
  const FloatAmbient& ops = chart_.ops();
  const PointData& pd = data();
  const Vec f = pd.supports(ops);
  const Mat df = ops.eps().asDiagonal() * normal_gradient();
  const auto dim = static_cast<Eigen::Index>(ops.dim());
  const Mat identity = Mat::Identity(dim, dim);
  std::vector<LemmaResidual> out;
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Vec grad = df.row(j).transpose();
    const double lhs = grad.dot(pd.metric_inv * grad);
    const Vec a = pd.shape_chart * pd.tangent_coords(ops, unit(dim, j));
    const double rhs = gradnorm_rhs(ops, pd, a,
                                    structure_contraction(ops, f, static_cast<std::size_t>(j)),
                                    identity);
    out.push_back(LemmaResidual{"gradnorm", std::abs(lhs - rhs), h_, u_, lhs, rhs});
  }
  return out;
}

std::vector<LemmaResidual> PointEvaluator::laplacian() {
  const FloatAmbient& ops = chart_.ops();
  const PointData& pd = data();
  const auto n = static_cast<Eigen::Index>(chart_.dim());
  const auto dim = static_cast<Eigen::Index>(ops.dim());
  Vec dh(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Offset plus{};
    Offset minus{};
    plus[static_cast<std::size_t>(k)] = 1;
    minus[static_cast<std::size_t>(k)] = -1;
    dh[k] = (mean_curvature_at(plus) - mean_curvature_at(minus)) / (2 * h_);
  }
  const Vec lap = ops.eps().cwiseProduct(laplacian_normal());
  const Vec f = pd.supports(ops);
  const double en = pd.eps_normal;
  std::vector<LemmaResidual> out;
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Vec x = pd.tangent_coords(ops, unit(dim, j));
    const double rhs = -en * x.dot(dh) - en * (pd.a_norm_sq + pd.ric_normal) * f[j];
    out.push_back(LemmaResidual{"laplacian", std::abs(lap[j] - rhs), h_, u_, lap[j], rhs});
  }
  return out;
}

GaussDuality PointEvaluator::duality() {
  const FloatAmbient& ops = chart_.ops();
  const PointData& pd = data();
  // Derivatives along the orthonormal frame: e = T L^-T, so d_e = d L^-T.
  const Mat l_inv_t = pd.frame.colPivHouseholderQr().solve(pd.orth_frame);
  const Mat de = normal_gradient() * l_inv_t;
  const Mat& e = pd.orth_frame;
  const Mat raw = e.transpose() * ops.eps().asDiagonal() * de;
  Mat corrected = raw;
  for (Eigen::Index k = 0; k < e.cols(); ++k) {
    const Vec conn = 0.5 * ops.bracket(e.col(k), pd.normal);
    corrected.col(k) += e.transpose() * ops.eps().cwiseProduct(conn);
  }
  GaussDuality out;
  out.raw = (raw + pd.shape).cwiseAbs().maxCoeff();
  out.corrected = (corrected + pd.shape).cwiseAbs().maxCoeff();
  return out;
}

GradientBound PointEvaluator::gradient_bound(const Vec& x) {
  const FloatAmbient& ops = chart_.ops();
  require_riemannian(ops, "gradient_bound_check");
  require_unit(ops, x, "gradient_bound_check");
  const auto dim = static_cast<Eigen::Index>(ops.dim());
  const Eigen::Index n = dim - 1;

  // Orthonormal basis with X last.
  Mat seed(dim, dim + 1);
  seed.col(0) = x;
  seed.rightCols(dim) = Mat::Identity(dim, dim);
  const Mat q = Eigen::HouseholderQR<Mat>(seed).householderQ() * Mat::Identity(dim, dim);
  Mat b(dim, dim);
  b.leftCols(n) = q.rightCols(n);
  b.col(n) = x;

  double kappa = 0;
  Vec s(dim);
  const PointData& pd = data();
  for (Eigen::Index l = 0; l < dim; ++l) {
    const Vec br = ops.bracket(b.col(l), x);
    s[l] = br.dot(pd.normal);  // sum_i c'_{l,n+1}^i f'_i
    if (l < n) {
      for (Eigen::Index i = 0; i < n; ++i) kappa = std::max(kappa, std::abs(br.dot(b.col(i))));
    }
  }
  const Vec fr = b.transpose() * pd.normal;  // f'_i
  const double s_sum = fr.head(n).cwiseAbs().sum();
  const double pi_norm = fr.head(n).norm();
  const double a_norm = std::sqrt(pd.a_norm_sq);
  const Vec xt = pd.tangent_coords(ops, x);
  const double xt_norm = std::sqrt(std::max(0.0, xt.dot(pd.metric * xt)));
  const double rhs = gradnorm_rhs(ops, pd, pd.shape_chart * xt, s, b);

  const Vec grad = normal_gradient().transpose() * ops.eps().cwiseProduct(x);
  GradientBound out;
  out.l0 = std::sqrt(std::max(0.0, grad.dot(pd.metric_inv * grad)));
  out.l1 = std::sqrt(std::max(0.0, rhs));
  out.kappa = kappa;
  out.l2 = a_norm * xt_norm + 0.5 * kappa * static_cast<double>(n) * s_sum;
  out.constant = a_norm + 0.5 * kappa * std::pow(static_cast<double>(n), 1.5);
  out.pi_norm = pi_norm;
  out.l3 = out.constant * pi_norm;
  out.slack = out.l3 - out.l0;
  return out;
}

LemmaResidual PointEvaluator::jacobi(const Vec& x) {
  require_riemannian(chart_.ops(), "jacobi_residual");
  const PointData& pd = data();
  const double fx = support_function(chart_.ops(), pd, x);
  const double lap = chart_.ops().inner(laplacian_normal(), x);
  const double pot = (pd.ric_normal + pd.a_norm_sq) * fx;
  return LemmaResidual{"jacobi", std::abs(lap + pot), h_, u_, lap, -pot};
}

Homothety PointEvaluator::homothety(double umbilic_tol) {
  if (!chart_.ops().lorentzian()) {
    throw GeometryError(ErrorKind::PreconditionFailed, "homothety_check: requires a Lorentzian ambient");
  }
  const PointData& pd = data();
  const Umbilicity um = umbilicity_and_threshold(chart_, pd);
  if (um.defect > umbilic_tol || std::abs(pd.mean_curvature) <= umbilic_tol) {
    throw GeometryError(ErrorKind::PreconditionFailed,
                        "homothety_check: non-umbilical or H = 0 at " + point_text(u_));
  }
  const auto n = static_cast<double>(chart_.dim());
  const Mat& d = pd.normal_derivative;
  const Mat pull = d.transpose() * chart_.ops().eps().asDiagonal() * d;
  Homothety out;
  out.expected_factor = (pd.mean_curvature / n) * (pd.mean_curvature / n);
  out.fitted_factor = (pull * pd.metric_inv).trace() / n;
  const Mat target = out.expected_factor * pd.metric;
  out.deviation = (pull - target).norm() / target.norm();
  return out;
}

// --- free functions ----------------------------------------------------------

PointData point_data(const ImmersionChart& chart, const Vec& u, double h) {
  return PointEvaluator(chart, u, h).data();
}

double support_function(const FloatAmbient& ops, const PointData& pd, const Vec& x) {
  return ops.inner(pd.normal, x);
}

std::size_t gauss_nullity(const PointData& pd, double tol, double floor) {
  const Eigen::JacobiSVD<Mat> svd(pd.shape);
  const Vec& s = svd.singularValues();
  const double largest = s.size() ? s[0] : 0.0;
  const double cut = std::max(tol * largest, floor);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > cut) ++rank;
  }
  return static_cast<std::size_t>(pd.shape.rows()) - rank;
}

double lemma31_identity(const FloatAmbient& ops, const PointData& pd, std::size_t l) {
  const Vec f = pd.supports(ops);
  const std::size_t dim = ops.dim();
  double s = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const double c = ops.c(j, l, i);
      if (c == 0.0) continue;
      s += c * ops.eps()[static_cast<Eigen::Index>(j)] * f[static_cast<Eigen::Index>(i)] *
           f[static_cast<Eigen::Index>(j)];
    }
  }
  return s;
}

double lemma31_max(const FloatAmbient& ops, const PointData& pd) {
  double worst = 0;
  for (std::size_t l = 0; l < ops.dim(); ++l) {
    worst = std::max(worst, std::abs(lemma31_identity(ops, pd, l)));
  }
  return worst;
}

std::vector<LemmaResidual> lemma32_gradient_all(const ImmersionChart& chart, const Vec& u, double h) {
  return PointEvaluator(chart, u, h).gradient();
}

LemmaResidual lemma32_gradient_check(const ImmersionChart& chart, const Vec& u, std::size_t j,
                                     double h) {
  return lemma32_gradient_all(chart, u, h).at(j);
}

std::vector<LemmaResidual> lemma34_gradnorm_all(const ImmersionChart& chart, const Vec& u, double h) {
  return PointEvaluator(chart, u, h).gradnorm();
}

LemmaResidual lemma34_gradnorm_check(const ImmersionChart& chart, const Vec& u, std::size_t j,
                                     double h) {
  return lemma34_gradnorm_all(chart, u, h).at(j);
}

std::vector<LemmaResidual> lemma35_laplacian_all(const ImmersionChart& chart, const Vec& u,
                                                 double h) {
  return PointEvaluator(chart, u, h).laplacian();
}

LemmaResidual lemma35_laplacian_check(const ImmersionChart& chart, const Vec& u, std::size_t j,
                                      double h) {
  return lemma35_laplacian_all(chart, u, h).at(j);
}

double laplacian_support(const ImmersionChart& chart, const Vec& u, const Vec& x, double h) {
  PointEvaluator ev(chart, u, h);
  return chart.ops().inner(ev.laplacian_normal(), x);
}

Vec chart_gradient_support(const ImmersionChart& chart, const Vec& u, const Vec& x, double h) {
  PointEvaluator ev(chart, u, h);
  return ev.normal_gradient().transpose() * chart.ops().eps().cwiseProduct(x);
}

GaussDuality gauss_duality(const ImmersionChart& chart, const Vec& u, double h) {
  return PointEvaluator(chart, u, h).duality();
}

ProjectionIdentity projection_identity_check(const FloatAmbient& ops, const PointData& pd,
                                             const Vec& x) {
  require_riemannian(ops, "projection_identity_check");
  require_unit(ops, x, "projection_identity_check");
  ProjectionIdentity out;
  const double fx = ops.inner(pd.normal, x);
  const Vec pi = pd.normal - fx * x;
  out.pi_norm_sq = pi.squaredNorm();
  out.one_minus_fx_sq = 1.0 - fx * fx;
  const Vec t = pd.tangent_coords(ops, x);
  out.tangent_norm_sq = t.dot(pd.metric * t);
  out.residual = std::max(std::abs(out.pi_norm_sq - out.one_minus_fx_sq),
                          std::abs(out.tangent_norm_sq - out.pi_norm_sq));
  return out;
}

GradientBound gradient_bound_check(const ImmersionChart& chart, const Vec& u, const Vec& x,
                                   double h) {
  return PointEvaluator(chart, u, h).gradient_bound(x);
}

LemmaResidual jacobi_residual(const ImmersionChart& chart, const Vec& u, const Vec& x, double h) {
  return PointEvaluator(chart, u, h).jacobi(x);
}

Umbilicity umbilicity_and_threshold(const ImmersionChart& chart, const PointData& pd) {
  if (!chart.ops().lorentzian()) {
    throw GeometryError(ErrorKind::PreconditionFailed,
                        "umbilicity_and_threshold: requires a Lorentzian ambient");
  }
  const auto n = static_cast<double>(chart.dim());
  Umbilicity out;
  out.h_squared = pd.mean_curvature * pd.mean_curvature;
  out.ric_normal = pd.ric_normal;
  out.threshold = out.h_squared + n * pd.ric_normal;
  const double mean = pd.shape.trace() / n;
  out.defect = (pd.shape - mean * Mat::Identity(pd.shape.rows(), pd.shape.cols())).norm();
  out.gap = pd.a_norm_sq - out.h_squared / n;
  return out;
}

Homothety homothety_at(const ImmersionChart& chart, const Vec& u, double h, double umbilic_tol) {
  return PointEvaluator(chart, u, h).homothety(umbilic_tol);
}

}  // namespace liegeo
