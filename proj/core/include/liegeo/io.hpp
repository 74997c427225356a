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

// Algebra documents:
//
//   {
//     "brackets": [ { "i": 1, "j": 2, "terms": { "3": "1/2" } }, ... ],
//     "dim": 3,
//     "labels": ["e1", "e2", "e3"],        (optional)
//     "name": "su2",
//     "signature": [1, 1, 1]
//   }
//
// Indices are 1-based and only pairs i < j are stored. Coefficients are strings in
// canonical ExactScalar form ("p", "p/q", "b*sqrt2", "a+b*sqrt2"). Unknown keys are
// rejected; errors name the offending location as a JSON pointer.

#include "liegeo/algebra.hpp"

#include <string>
#include <string_view>

namespace liegeo {

/// Canonical document text (sorted keys, two-space indent, trailing newline).
std::string algebra_to_json(const MetricLieAlgebra& alg);

/// Throws GeometryError(InvalidDocument) with a JSON pointer on schema violations.
MetricLieAlgebra algebra_from_json(std::string_view text);

}  // namespace liegeo
