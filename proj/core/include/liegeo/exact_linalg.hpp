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

#include "liegeo/exact_scalar.hpp"
#include "liegeo/matrix.hpp"

#include <optional>
#include <vector>

namespace liegeo::exact {

using ExactMatrix = Matrix<ExactScalar>;
using ExactRow = std::vector<ExactScalar>;

struct RowEchelon {
  ExactMatrix reduced;              // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

RowEchelon row_echelon(ExactMatrix m);
std::size_t rank(const ExactMatrix& m);
ExactMatrix from_rows(const std::vector<ExactRow>& rows, std::size_t cols);

/// Basis of { x : m x = 0 }.
std::vector<ExactRow> nullspace(const ExactMatrix& m);
ExactScalar determinant(ExactMatrix m);
std::optional<ExactMatrix> inverse(const ExactMatrix& m);
ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix transpose(const ExactMatrix& m);

/// Eliminates the pivot columns of `echelon` from `v`; zero iff v lies in the row space.
ExactRow reduce(const RowEchelon& echelon, ExactRow v);

}  // namespace liegeo::exact
