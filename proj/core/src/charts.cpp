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

#include <cmath>
#include <numbers>

namespace liegeo::catalog {

namespace {

[[noreturn]] void bad_param(const std::string& what) {
  throw GeometryError(ErrorKind::InvalidParameter, what);
}

Vec basis(std::size_t dim, std::size_t k) {
  Vec e = Vec::Zero(static_cast<Eigen::Index>(dim));
  e[static_cast<Eigen::Index>(k)] = 1.0;
  return e;
}

ParamBox cube(std::size_t n, double half) {
  return ParamBox{Vec::Constant(static_cast<Eigen::Index>(n), -half),
                  Vec::Constant(static_cast<Eigen::Index>(n), half)};
}

/// su(2) structure constant c with [e1,e2] = c e3 (cyclic), read off the algebra.
double su2_constant(const MetricLieAlgebra& alg, std::size_t offset) {
  return alg.c(offset, offset + 1, offset + 2).to_double();
}

/**
 * Left-trivialized frames of phi(u) = exp(u1 e1) exp(u2 e2) exp(u3 e3) in su(2) with
 * [e1,e2] = c e3 cyclic, written into rows offset..offset+2 of `t` (columns 0..2).
 */
void write_euler_frames(Mat& t, const Vec& u, double c, Eigen::Index offset) {
  const double c2 = std::cos(c * u[1]);
  const double s2 = std::sin(c * u[1]);
  const double c3 = std::cos(c * u[2]);
  const double s3 = std::sin(c * u[2]);
  t(offset + 0, 0) = c2 * c3;
  t(offset + 1, 0) = -c2 * s3;
  t(offset + 2, 0) = s2;
  t(offset + 0, 1) = s3;
  t(offset + 1, 1) = c3;
  t(offset + 2, 1) = 0.0;
  t(offset + 0, 2) = 0.0;
  t(offset + 1, 2) = 0.0;
  t(offset + 2, 2) = 1.0;
}

/// Half-width of the Euler cube, keeping cos(c u2) >= cos(1).
double euler_half_width(double c) { return std::min(1.0, 1.0 / c); }

bool is_su2_product(const CatalogId& amb) {
  return amb.name == "product" && amb.text("factor", "su2") == "su2";
}

/// For a Lorentzian ambient the normal points against the time-oriented reference.
Vec anchor_for(const MetricLieAlgebra& alg, const Vec& reference) {
  return alg.signature().lorentzian() ? Vec(-reference) : reference;
}

ChartInfo info_for(const CatalogId& id, bool compact, bool complete, Vec reference,
                   std::string label) {
  ChartInfo info;
  info.fixture = id.to_string();
  info.compact = compact;
  info.complete = complete;
  info.reference = std::move(reference);
  info.reference_label = std::move(label);
  return info;
}

ImmersionChart sphere_chart(const CatalogId& id) {
  id.restrict_to({"r", "orient", "margin", "ambient"});
  const CatalogId amb = CatalogId::parse(id.text("ambient", "euclidean:n=3"));
  const MetricLieAlgebra alg = catalog_algebra(amb);
  if (amb.name != "euclidean" || alg.dim() != 3) bad_param("sphere: ambient must be euclidean:n=3");
  const double r = id.real("r", 1.0);
  if (!(r > 0)) bad_param("sphere: r must be positive");
  const double margin = id.real("margin", 0.5);
  if (!(margin > 0 && margin < 1.4)) bad_param("sphere: margin must lie in (0, 1.4)");
  const std::string orient = id.text("orient", "out");
  if (orient != "out" && orient != "in") bad_param("sphere: orient must be out or in");

  // phi(theta, psi) = r (cos theta, sin theta cos psi, sin theta sin psi); the chart axis
  // is e1, so the e3 poles and the equator x3 = 0 lie inside the domain.
  ParamBox box{Vec(2), Vec(2)};
  box.lo << margin, -std::numbers::pi;
  box.hi << std::numbers::pi - margin, std::numbers::pi;
  FrameFunction frame = [r](const Vec& u) {
    const double ct = std::cos(u[0]);
    const double st = std::sin(u[0]);
    const double cp = std::cos(u[1]);
    const double sp = std::sin(u[1]);
    Mat t(3, 2);
    t << -r * st, 0.0, r * ct * cp, -r * st * sp, r * ct * sp, r * st * cp;
    return t;
  };
  const Vec out = basis(3, 1);  // outward normal at the center (pi/2, 0)
  return ImmersionChart(id.to_string(), alg, box, frame, orient == "out" ? out : Vec(-out),
                        info_for(id, true, true, basis(3, 2), "e3"));
}

ImmersionChart hyperbolic_chart(const CatalogId& id) {
  id.restrict_to({"r", "perturb", "extent", "ambient"});
  const CatalogId amb = CatalogId::parse(id.text("ambient", "minkowski:n=3"));
  const MetricLieAlgebra alg = catalog_algebra(amb);
  if (amb.name != "minkowski" || alg.dim() != 3) {
    bad_param("hyperbolic_graph: ambient must be minkowski:n=3");
  }
  const double r = id.real("r", 1.0);
  const double p = id.real("perturb", 0.0);
  const double extent = id.real("extent", 1.0);
  if (!(r > 0) || !(extent > 0)) bad_param("hyperbolic_graph: r and extent must be positive");
  // phi(u) = (u1, u2, sqrt(r^2 + |u|^2) + p u1^2); the last coordinate is time.
  FrameFunction frame = [r, p](const Vec& u) {
    const double rho = std::sqrt(r * r + u.squaredNorm());
    Mat t(3, 2);
    t << 1.0, 0.0, 0.0, 1.0, u[0] / rho + 2 * p * u[0], u[1] / rho;
    return t;
  };
  const Vec time = basis(3, 2);
  return ImmersionChart(id.to_string(), alg, cube(2, extent), frame, anchor_for(alg, time),
                        info_for(id, false, p == 0.0, time, "T"));
}

ImmersionChart graph_chart(const CatalogId& id) {
  id.restrict_to({"amp", "width", "extent", "ambient"});
  const CatalogId amb = CatalogId::parse(id.text("ambient", "euclidean:n=3"));
  const MetricLieAlgebra alg = catalog_algebra(amb);
  const double amp = id.real("amp", 0.1);
  const double w = id.real("width", 0.5);
  if (!(w > 0)) bad_param("graph: width must be positive");
  const std::size_t dim = alg.dim();
  const std::size_t n = dim - 1;
  const Vec top = basis(dim, n);
  // F(u) = amp exp(-|u|^2 / w^2); the graph direction is the last basis vector.
  auto grad_f = [amp, w](const Vec& u) -> Vec {
    return (-2.0 * amp / (w * w) * std::exp(-u.squaredNorm() / (w * w))) * u;
  };
  if (amb.name == "euclidean" || amb.name == "minkowski") {
    if (dim < 2) bad_param("graph: ambient dimension must be >= 2");
    const double extent = id.real("extent", 1.0);
    FrameFunction frame = [n, dim, grad_f](const Vec& u) {
      Mat t = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(n));
      t.topRows(static_cast<Eigen::Index>(n)).setIdentity();
      t.row(static_cast<Eigen::Index>(n)) = grad_f(u).transpose();
      return t;
    };
    return ImmersionChart(id.to_string(), alg, cube(n, extent), frame, anchor_for(alg, top),
                          info_for(id, false, true, top, alg.labels().back()));
  }
  if (is_su2_product(amb)) {
    const double c = su2_constant(alg, 0);
    const double extent = id.real("extent", euler_half_width(c));
    FrameFunction frame = [c, grad_f](const Vec& u) {
      Mat t = Mat::Zero(4, 3);
      write_euler_frames(t, u, c, 0);
      t.row(3) = grad_f(u).transpose();
      return t;
    };
    return ImmersionChart(id.to_string(), alg, cube(3, extent), frame, anchor_for(alg, top),
                          info_for(id, true, true, top, "T"));
  }
  bad_param("graph: ambient must be euclidean, minkowski or product:factor=su2");
}

ImmersionChart su2_in_u2_chart(const CatalogId& id, const MetricLieAlgebra& alg) {
  const double c = su2_constant(alg, 0);
  FrameFunction frame = [c](const Vec& u) {
    Mat t = Mat::Zero(4, 3);
    write_euler_frames(t, u, c, 0);
    return t;
  };
  const Vec z = basis(4, 3);
  return ImmersionChart(id.to_string(), alg, cube(3, euler_half_width(c)), frame, z,
                        info_for(id, true, true, z, "z"));
}

ImmersionChart slice_chart(const CatalogId& id) {
  id.restrict_to({"t", "ambient"});
  (void)id.real("t", 0.0);  // left translation: the trivialized data do not depend on t
  const CatalogId amb = CatalogId::parse(id.text("ambient", "product:factor=su2"));
  const MetricLieAlgebra alg = catalog_algebra(amb);
  const std::size_t dim = alg.dim();
  const std::size_t n = dim - 1;
  const Vec top = basis(dim, n);

  if (amb.name == "product") {
    const std::string factor = amb.text("factor", "su2");
    if (factor == "su2" || factor == "u2") {
      const double c = su2_constant(alg, 0);
      FrameFunction frame = [c, n, dim](const Vec& u) {
        Mat t = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(n));
        write_euler_frames(t, u, c, 0);
        if (n == 4) t(3, 3) = 1.0;  // central z of u(2)
        return t;
      };
      ParamBox box = cube(n, euler_half_width(c));
      return ImmersionChart(id.to_string(), alg, box, frame, anchor_for(alg, top),
                            info_for(id, factor == "su2", true, top, "T"));
    }
    FrameFunction frame = [n, dim](const Vec&) {
      Mat t = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(n));
      t.topRows(static_cast<Eigen::Index>(n)).setIdentity();
      return t;
    };
    return ImmersionChart(id.to_string(), alg, cube(n, 1.0), frame, anchor_for(alg, top),
                          info_for(id, false, true, top, "T"));
  }
  if (amb.name == "u2") return su2_in_u2_chart(id, alg);
  if (amb.name == "euclidean" || amb.name == "minkowski") {
    FrameFunction frame = [n, dim](const Vec&) {
      Mat t = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(n));
      t.topRows(static_cast<Eigen::Index>(n)).setIdentity();
      return t;
    };
    return ImmersionChart(id.to_string(), alg, cube(n, 1.0), frame, anchor_for(alg, top),
                          info_for(id, false, true, top, alg.labels().back()));
  }

  // Generic route: look for a codimension-one subalgebra and inspect its metric.
  const auto sub = codim1_subalgebra(alg);
  if (!sub) {
    bad_param("subgroup_slice: " + alg.name() + " has no codimension-one subalgebra");
  }
  exact::ExactMatrix gram(sub->basis.size(), sub->basis.size());
  for (std::size_t a = 0; a < sub->basis.size(); ++a) {
    for (std::size_t b = 0; b < sub->basis.size(); ++b) {
      gram(a, b) = inner<ExactScalar>(alg, sub->basis.vectors[a], sub->basis.vectors[b]);
    }
  }
  if (exact::determinant(gram).is_zero()) {
    // The orthogonal complement of the subalgebra is its (null) normal direction.
    exact::ExactMatrix rows(sub->basis.size(), dim);
    for (std::size_t a = 0; a < sub->basis.size(); ++a) {
      for (std::size_t i = 0; i < dim; ++i) {
        rows(a, i) = alg.eps(i) > 0 ? sub->basis.vectors[a][i] : -sub->basis.vectors[a][i];
      }
    }
    const auto normal = exact::nullspace(rows);
    std::string text;
    if (!normal.empty()) {
      text = " (normal ";
      for (std::size_t i = 0; i < dim; ++i) {
        text += (i ? "," : "") + normal.front()[i].to_string();
      }
      text += " is null)";
    }
    throw GeometryError(ErrorKind::DegenerateInducedMetric,
                        "subgroup_slice: degenerate induced metric on the codimension-one "
                        "subalgebra of " + alg.name() + text);
  }
  bad_param("subgroup_slice: no closed-form chart for the subalgebra of " + alg.name());
}

ImmersionChart affine_chart(const CatalogId& id) {
  id.restrict_to({"offset", "extent", "ambient"});
  (void)id.real("offset", 0.0);
  const CatalogId amb = CatalogId::parse(id.text("ambient", "euclidean:n=3"));
  if (amb.name != "euclidean" && amb.name != "minkowski") {
    bad_param("affine_subspace: ambient must be euclidean or minkowski");
  }
  const MetricLieAlgebra alg = catalog_algebra(amb);
  const std::size_t dim = alg.dim();
  if (dim < 2) bad_param("affine_subspace: ambient dimension must be >= 2");
  const std::size_t n = dim - 1;
  FrameFunction frame = [n, dim](const Vec&) {
    Mat t = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(n));
    t.topRows(static_cast<Eigen::Index>(n)).setIdentity();
    return t;
  };
  const Vec top = basis(dim, n);
  return ImmersionChart(id.to_string(), alg, cube(n, id.real("extent", 1.0)), frame,
                        anchor_for(alg, top), info_for(id, false, true, top, alg.labels().back()));
}

}  // namespace

ImmersionChart catalog_immersion(const CatalogId& id) {
  if (id.name == "sphere") return sphere_chart(id);
  if (id.name == "hyperbolic_graph") return hyperbolic_chart(id);
  if (id.name == "graph") return graph_chart(id);
  if (id.name == "subgroup_slice") return slice_chart(id);
  if (id.name == "su2_in_u2") {
    id.restrict_to({});
    return su2_in_u2_chart(id, u2());
  }
  if (id.name == "affine_subspace") return affine_chart(id);
  throw GeometryError(ErrorKind::UnknownCatalogEntry, "unknown catalog immersion '" + id.name + "'");
}

ImmersionChart catalog_immersion(std::string_view text) {
  return catalog_immersion(CatalogId::parse(text));
}

}  // namespace liegeo::catalog
