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

#include "liegeo/structure.hpp"

#include "liegeo/format.hpp"

#include <algorithm>
#include <cmath>

namespace liegeo {

namespace {

using exact::ExactMatrix;

std::string location_text(std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (std::size_t i : idx) {
    if (!first) s += ",";
    s += std::to_string(i + 1);
    first = false;
  }
  return s + ")";
}

/// Tracks the worst residual of one identity family.
template <class T>
class ResidualTracker {
 public:
  ResidualTracker(std::string name, bool exact, double tol)
      : name_(std::move(name)), exact_(exact), tol_(tol) {}

  void add(const T& residual, std::initializer_list<std::size_t> where) {
    const double mag = std::abs(ScalarTraits<T>::to_double(residual));
    bool violated;
    if constexpr (ScalarTraits<T>::exact) {
      violated = !residual.is_zero();
    } else {
      violated = mag > tol_;
    }
    if (!violated) return;
    ++violations_;
    if (violations_ == 1 || mag > worst_mag_) {
      worst_mag_ = mag;
      worst_ = residual;
      location_ = location_text(where);
    }
  }

  CheckEntry finish() const {
    CheckEntry e;
    e.name = name_;
    e.passed = violations_ == 0;
    e.violations = violations_;
    e.location = location_;
    e.residual_value = worst_mag_;
    if constexpr (ScalarTraits<T>::exact) {
      e.residual = abs(worst_).to_string();
    } else {
      e.residual = format_double(worst_mag_);
    }
    return e;
  }

 private:
  std::string name_;
  bool exact_;
  double tol_;
  std::size_t violations_ = 0;
  double worst_mag_ = 0.0;
  T worst_{0};
  std::string location_;
};

template <class T>
CheckReport validate_impl(const MetricLieAlgebra& alg, bool exact, double tol) {
  const std::size_t n = alg.dim();
  auto c = [&](std::size_t i, std::size_t j, std::size_t k) -> T {
    if constexpr (ScalarTraits<T>::exact) {
      return alg.c(i, j, k);
    } else {
      return alg.c(i, j, k).to_double();
    }
  };
  ResidualTracker<T> antisym("antisymmetry", exact, tol);
  ResidualTracker<T> jacobi("jacobi", exact, tol);
  ResidualTracker<T> adinv("ad_invariance", exact, tol);
  ResidualTracker<T> trace("trace", exact, tol);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        antisym.add(c(i, j, k) + c(j, i, k), {i, j, k});
        const T lhs = alg.eps(k) > 0 ? c(i, j, k) : -c(i, j, k);
        const T rhs = alg.eps(i) > 0 ? c(j, k, i) : -c(j, k, i);
        adinv.add(lhs - rhs, {i, j, k});
      }
      trace.add(c(i, j, i), {i, j, i});
      trace.add(c(i, i, j), {i, i, j});
    }
  }

  // The Jacobiator is alternating in (i,j,k) once antisymmetry holds; all ordered
  // triples are still visited so a broken antisymmetry cannot hide a violation.
  const auto& entries = alg.entries<T>();
  std::vector<std::vector<const StructureEntry<T>*>> by_first(n);
  for (const auto& e : entries) by_first[e.i].push_back(&e);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<T> acc(n, T(0));
        auto cyc = [&](std::size_t a, std::size_t b, std::size_t d) {
          // sum_m c_ab^m c_md^l
          for (std::size_t m = 0; m < n; ++m) {
            const T cab = c(a, b, m);
            if (cab == T(0)) continue;
            for (const auto* e : by_first[m]) {
              if (e->j == d) acc[e->k] += cab * e->value;
            }
          }
        };
        cyc(i, j, k);
        cyc(j, k, i);
        cyc(k, i, j);
        for (std::size_t l = 0; l < n; ++l) jacobi.add(acc[l], {i, j, k, l});
      }
    }
  }

  CheckReport report;
  report.subject = alg.name();
  report.exact = exact;
  report.tolerance = exact ? 0.0 : tol;
  report.entries = {antisym.finish(), jacobi.finish(), adinv.finish(), trace.finish()};
  return report;
}

ExactScalar gram_inner(const ExactMatrix& g, const exact::ExactRow& v, const exact::ExactRow& w) {
  ExactScalar s(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j].is_zero() || g(i, j).is_zero()) continue;
      s += v[i] * g(i, j) * w[j];
    }
  }
  return s;
}

exact::ExactRow axpy(const exact::ExactRow& x, const ExactScalar& a, const exact::ExactRow& y) {
  exact::ExactRow out = x;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!y[i].is_zero()) out[i] += a * y[i];
  }
  return out;
}

}  // namespace

std::size_t subspace_rank(const SubspaceBasis& basis, std::size_t ambient_dim) {
  if (basis.empty()) return 0;
  return exact::rank(exact::from_rows(basis.vectors, ambient_dim));
}

CheckReport validate(const MetricLieAlgebra& alg, bool exact, double tol) {
  if (exact) return validate_impl<ExactScalar>(alg, true, tol);
  return validate_impl<double>(alg, false, tol);
}

StructureTensor change_basis(const StructureTensor& c, const ExactMatrix& basis) {
  const std::size_t n = c.dim();
  auto inv = exact::inverse(basis);
  if (!inv) throw GeometryError(ErrorKind::DependentBasis, "change_basis: singular basis matrix");
  StructureTensor out(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      // w = [b_a, b_b] in old coordinates.
      exact::ExactRow w(n, ExactScalar(0));
      for (std::size_t i = 0; i < n; ++i) {
        if (basis(a, i).is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (basis(b, j).is_zero()) continue;
          const ExactScalar f = basis(a, i) * basis(b, j);
          for (std::size_t k = 0; k < n; ++k) {
            if (!c(i, j, k).is_zero()) w[k] += f * c(i, j, k);
          }
        }
      }
      for (std::size_t t = 0; t < n; ++t) {
        ExactScalar coeff(0);
        for (std::size_t k = 0; k < n; ++k) {
          if (!w[k].is_zero() && !(*inv)(k, t).is_zero()) coeff += w[k] * (*inv)(k, t);
        }
        if (!coeff.is_zero()) out.set_bracket(a, b, t, coeff);
      }
    }
  }
  return out;
}

OrthonormalBasisChange orthonormalize(const ExactMatrix& gram, const StructureTensor& brackets,
                                      std::string name, std::vector<std::string> labels) {
  const std::size_t n = gram.rows();
  if (gram.cols() != n || brackets.dim() != n) {
    throw GeometryError(ErrorKind::DimensionMismatch, "orthonormalize: shape mismatch");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (gram(i, j) != gram(j, i)) {
        throw GeometryError(ErrorKind::DegenerateGram, "orthonormalize: gram matrix not symmetric");
      }
    }
  }

  std::vector<exact::ExactRow> pending;
  for (std::size_t i = 0; i < n; ++i) pending.push_back(ExactMatrix::identity(n).row(i));

  std::vector<exact::ExactRow> accepted;
  std::vector<ExactScalar> norms;
  while (!pending.empty()) {
    exact::ExactRow v = pending.front();
    ExactScalar q = gram_inner(gram, v, v);
    if (q.is_zero()) {
      std::size_t partner = 0;
      for (std::size_t j = 1; j < pending.size(); ++j) {
        if (!gram_inner(gram, v, pending[j]).is_zero()) {
          partner = j;
          break;
        }
      }
      if (partner == 0) {
        throw GeometryError(ErrorKind::DegenerateGram, "orthonormalize: degenerate gram matrix");
      }
      exact::ExactRow plus = axpy(v, ExactScalar(1), pending[partner]);
      exact::ExactRow minus = axpy(v, ExactScalar(-1), pending[partner]);
      if (gram_inner(gram, plus, plus).is_zero()) std::swap(plus, minus);
      pending.front() = plus;
      pending[partner] = minus;
      continue;
    }
    pending.erase(pending.begin());
    for (auto& w : pending) {
      const ExactScalar p = gram_inner(gram, w, v);
      if (!p.is_zero()) w = axpy(w, -p / q, v);
    }
    accepted.push_back(std::move(v));
    norms.push_back(std::move(q));
  }

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    if (norms[i].sign() > 0) order.push_back(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (norms[i].sign() < 0) order.push_back(i);
  }
  const std::size_t negatives = n - static_cast<std::size_t>(std::count_if(
                                        norms.begin(), norms.end(),
                                        [](const ExactScalar& q) { return q.sign() > 0; }));
  if (negatives > 1) {
    throw GeometryError(ErrorKind::IndexTooLarge,
                        "orthonormalize: metric index " + std::to_string(negatives) + " exceeds 1");
  }

  ExactMatrix basis(n, n);
  std::vector<int> eps;
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t i = order[r];
    const ExactScalar q = abs(norms[i]);
    auto root = q.sqrt();
    if (!root) {
      throw GeometryError(ErrorKind::NotRepresentable,
                          "orthonormalize: sqrt(" + q.to_string() + ") is not in Q(sqrt2)");
    }
    for (std::size_t k = 0; k < n; ++k) basis(r, k) = accepted[i][k] / *root;
    eps.push_back(norms[i].sign());
  }

  StructureTensor c = change_basis(brackets, basis);
  return {MetricLieAlgebra(std::move(name), Signature(eps), std::move(c), std::move(labels)),
          std::move(basis)};
}

SubspaceBasis center(const MetricLieAlgebra& alg) {
  const std::size_t n = alg.dim();
  // Rows indexed by (i,k): sum_a v_a c_{a i}^k = 0.
  ExactMatrix m(n * n, n);
  for (const auto& e : alg.entries<ExactScalar>()) m(e.j * n + e.k, e.i) = e.value;
  return {exact::nullspace(m)};
}

SubspaceBasis derived_algebra(const MetricLieAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<exact::ExactRow> rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      exact::ExactRow r(n, ExactScalar(0));
      bool nonzero = false;
      for (std::size_t k = 0; k < n; ++k) {
        r[k] = alg.c(i, j, k);
        nonzero = nonzero || !r[k].is_zero();
      }
      if (nonzero) rows.push_back(std::move(r));
    }
  }
  if (rows.empty()) return {};
  const auto e = exact::row_echelon(exact::from_rows(rows, n));
  SubspaceBasis out;
  for (std::size_t r = 0; r < e.rank(); ++r) out.vectors.push_back(e.reduced.row(r));
  return out;
}

SemisimplicityCertificate is_semisimple(const MetricLieAlgebra& alg) {
  const auto b = killing_matrix<ExactScalar>(alg);
  SemisimplicityCertificate cert;
  cert.determinant = exact::determinant(b);
  cert.semisimple = !cert.determinant.is_zero();
  if (!cert.semisimple) {
    auto ns = exact::nullspace(b);
    if (!ns.empty()) cert.null_vector = ns.front();
  }
  return cert;
}

SubalgebraWitness is_subalgebra(const MetricLieAlgebra& alg, const SubspaceBasis& h) {
  const std::size_t n = alg.dim();
  for (const auto& v : h.vectors) detail::require_dim(alg, v.size(), "is_subalgebra");
  if (subspace_rank(h, n) != h.size()) {
    throw GeometryError(ErrorKind::DependentBasis, "is_subalgebra: basis is linearly dependent");
  }
  SubalgebraWitness w;
  if (h.empty()) return w;
  const auto echelon = exact::row_echelon(exact::from_rows(h.vectors, n));
  for (std::size_t a = 0; a < h.size(); ++a) {
    for (std::size_t b = a + 1; b < h.size(); ++b) {
      ExactVector br = bracket(alg, h.vectors[a], h.vectors[b]);
      ExactVector rest = exact::reduce(echelon, br);
      if (!detail::is_zero_vector<ExactScalar>(rest)) {
        w.closed = false;
        w.first = a;
        w.second = b;
        w.bracket = std::move(br);
        w.outside = std::move(rest);
        return w;
      }
    }
  }
  return w;
}

std::optional<Codim1Subalgebra> codim1_subalgebra(const MetricLieAlgebra& alg) {
  const std::size_t n = alg.dim();
  if (n < 2) return std::nullopt;

  const SubspaceBasis z = center(alg);
  std::vector<ExactVector> candidates = z.vectors;
  for (std::size_t a = 0; a < z.size(); ++a) {
    for (std::size_t b = a + 1; b < z.size(); ++b) {
      candidates.push_back(axpy(z.vectors[a], ExactScalar(1), z.vectors[b]));
      candidates.push_back(axpy(z.vectors[a], ExactScalar(-1), z.vectors[b]));
    }
  }
  for (const auto& zc : candidates) {
    if (inner<ExactScalar>(alg, zc, zc).is_zero()) continue;
    ExactMatrix row(1, n);
    for (std::size_t i = 0; i < n; ++i) row(0, i) = alg.eps(i) > 0 ? zc[i] : -zc[i];
    SubspaceBasis perp{exact::nullspace(row)};
    if (is_subalgebra(alg, perp).closed) {
      return Codim1Subalgebra{std::move(perp), "center_orthogonal", zc};
    }
  }

  SubspaceBasis derived = derived_algebra(alg);
  if (derived.size() + 1 > n) return std::nullopt;
  SubspaceBasis hyper = derived;
  for (std::size_t i = 0; i < n && hyper.size() < n - 1; ++i) {
    SubspaceBasis trial = hyper;
    trial.vectors.push_back(alg.basis_vector<ExactScalar>(i));
    if (subspace_rank(trial, n) == trial.size()) hyper = std::move(trial);
  }
  if (hyper.size() == n - 1 && is_subalgebra(alg, hyper).closed) {
    return Codim1Subalgebra{std::move(hyper), "derived_hyperplane", std::nullopt};
  }
  return std::nullopt;
}

}  // namespace liegeo
