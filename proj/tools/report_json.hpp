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

// JSON views of the library reports. Objects use sorted keys and non-finite numbers
// become null, so equal inputs give byte-identical documents.

#include "liegeo/check_report.hpp"
#include "liegeo/surface_checks.hpp"
#include "liegeo/theorem_lab.hpp"

#include <json.hpp>

namespace liegeo::cli {

using nlohmann::json;

json to_json(double v);
json to_json(const Vec& v);
json to_json(const ExactVector& v);
json to_json(const CheckReport& r);
json to_json(const ResidualStats& s);
json to_json(const CheckSummary& c);
json to_json(const SurfaceReport& r);
json to_json(const Predicate& p);
json to_json(const TheoremReport& t);
json to_json(const AlgebraReport& r);
json to_json(const LorentzPlaneReport& r);
json to_json(const TransversalityReport& r);
json to_json(const HypersurfaceScan& s);
json to_json(const HypersurfaceReport& r);
json to_json(const std::vector<CurvatureEntry>& table);
json to_json(const std::vector<RicciEntry>& table);
json to_json(const std::vector<FamilyEntry>& table);

}  // namespace liegeo::cli
