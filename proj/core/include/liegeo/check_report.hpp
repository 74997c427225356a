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

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace liegeo {

struct CheckEntry {
  std::string name;
  bool passed = true;
  std::string residual;  // exact text in exact mode, shortest round-trip decimal otherwise
  double residual_value = 0.0;
  std::string location;  // 1-based indices of the worst violation, e.g. "(1,2,3)"
  std::size_t violations = 0;
};

struct CheckReport {
  std::string subject;
  bool exact = true;
  double tolerance = 0.0;
  std::vector<CheckEntry> entries;

  bool passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.passed; });
  }
  const CheckEntry* find(std::string_view name) const {
    for (const auto& e : entries) {
      if (e.name == name) return &e;
    }
    return nullptr;
  }
};

}  // namespace liegeo
