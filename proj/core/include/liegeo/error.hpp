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

#include <stdexcept>
#include <string>

namespace liegeo {

enum class ErrorKind {
  DimensionMismatch,
  InvalidSignature,
  DegeneratePlane,
  DegenerateVector,
  DegenerateGram,
  IndexTooLarge,
  NotRepresentable,
  DependentBasis,
  UnknownCatalogEntry,
  InvalidParameter,
  RankDeficientFrame,
  NonSpacelike,
  OrientationConflict,
  DomainViolation,
  DegenerateInducedMetric,
  PreconditionFailed,
  InvalidDocument,
};

/// Single exception type for the library; `kind()` distinguishes the failure.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace liegeo
