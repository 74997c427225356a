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

#include "liegeo/algebra.hpp"

#include <algorithm>

namespace liegeo {

Signature::Signature(std::vector<int> eps) : eps_(std::move(eps)) {
  if (eps_.empty()) throw GeometryError(ErrorKind::InvalidSignature, "signature: empty");
  for (int e : eps_) {
    if (e != 1 && e != -1) {
      throw GeometryError(ErrorKind::InvalidSignature, "signature: entries must be +1 or -1");
    }
  }
  if (index() > 1) {
    throw GeometryError(ErrorKind::IndexTooLarge,
                        "signature: index " + std::to_string(index()) + " exceeds 1");
  }
}

std::size_t Signature::index() const {
  return static_cast<std::size_t>(std::count(eps_.begin(), eps_.end(), -1));
}

std::size_t Signature::timelike_position() const {
  auto it = std::find(eps_.begin(), eps_.end(), -1);
  return static_cast<std::size_t>(it - eps_.begin());
}

MetricLieAlgebra::MetricLieAlgebra(std::string name, Signature signature, StructureTensor c,
                                   std::vector<std::string> labels)
    : name_(std::move(name)),
      signature_(std::move(signature)),
      c_(std::move(c)),
      labels_(std::move(labels)) {
  const std::size_t n = signature_.size();
  if (c_.dim() != n) {
    throw GeometryError(ErrorKind::DimensionMismatch,
                        "algebra: structure tensor dimension does not match signature");
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels_.push_back("e" + std::to_string(i + 1));
  } else if (labels_.size() != n) {
    throw GeometryError(ErrorKind::DimensionMismatch, "algebra: label count mismatch");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const ExactScalar& v = c_(i, j, k);
        if (v.is_zero()) continue;
        exact_entries_.push_back({i, j, k, v});
        float_entries_.push_back({i, j, k, v.to_double()});
      }
    }
  }
}

ExactVector to_exact(std::span<const std::int64_t> v) {
  return ExactVector(v.begin(), v.end());
}

FloatVector to_float(std::span<const ExactScalar> v) {
  FloatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.to_double());
  return out;
}

}  // namespace liegeo
