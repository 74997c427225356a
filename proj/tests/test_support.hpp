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

#include "liegeo/algebra.hpp"
#include "liegeo/error.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace liegeo::test {

/// Every catalog algebra id exercised by the property tests.
inline const std::vector<std::string>& catalog_algebra_ids() {
  static const std::vector<std::string> ids{
      "euclidean:n=3",      "minkowski:n=4", "su2",           "su2:scale=2",
      "u2",                 "sl2r",          "oscillator:m=1", "oscillator:m=2",
      "oscillator:m=3",     "product:factor=su2",              "product:factor=u2",
      "product:factor=euclidean,n=2"};
  return ids;
}

inline ExactVector random_int_vector(std::mt19937_64& rng, std::size_t n, int range = 4) {
  std::uniform_int_distribution<int> d(-range, range);
  ExactVector v(n);
  for (auto& x : v) x = ExactScalar(d(rng));
  return v;
}

inline FloatVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> d(0.0, 1.0);
  FloatVector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

template <class F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  throw std::logic_error("expected a GeometryError");
}

}  // namespace liegeo::test
