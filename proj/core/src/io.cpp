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

#include "liegeo/io.hpp"

#include "liegeo/error.hpp"

#include <json.hpp>

#include <set>
#include <utility>

namespace liegeo {

using nlohmann::json;

std::string algebra_to_json(const MetricLieAlgebra& alg) {
  const std::size_t n = alg.dim();
  json doc = json::object();
  doc["name"] = alg.name();
  doc["dim"] = n;
  doc["signature"] = alg.signature().values();
  doc["labels"] = alg.labels();
  json brackets = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      json terms = json::object();
      for (std::size_t k = 0; k < n; ++k) {
        const ExactScalar& v = alg.c(i, j, k);
        if (!v.is_zero()) terms[std::to_string(k + 1)] = v.to_string();
      }
      if (terms.empty()) continue;
      brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"terms", std::move(terms)}});
    }
  }
  doc["brackets"] = std::move(brackets);
  return doc.dump(2) + "\n";
}

namespace {

[[noreturn]] void fail(const std::string& pointer, const std::string& what) {
  throw GeometryError(ErrorKind::InvalidDocument,
                      "algebra document " + (pointer.empty() ? std::string("/") : pointer) +
                          ": " + what);
}

void only_keys(const json& obj, const std::string& at, std::initializer_list<const char*> keys) {
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) fail(at + "/" + key, "unknown key");
  }
}

const json& member(const json& obj, const std::string& at, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(at + "/" + key, "missing");
  return *it;
}

std::size_t index_value(const json& v, const std::string& at, std::size_t dim) {
  if (!v.is_number_integer()) fail(at, "expected an integer");
  const auto i = v.get<std::int64_t>();
  if (i < 1 || static_cast<std::size_t>(i) > dim) {
    fail(at, "index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
  }
  return static_cast<std::size_t>(i - 1);
}

}  // namespace

MetricLieAlgebra algebra_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail("", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("", "expected an object");
  only_keys(doc, "", {"name", "dim", "signature", "labels", "brackets"});

  const json& name = member(doc, "", "name");
  if (!name.is_string()) fail("/name", "expected a string");

  const json& dim_v = member(doc, "", "dim");
  if (!dim_v.is_number_integer() || dim_v.get<std::int64_t>() < 1) {
    fail("/dim", "expected a positive integer");
  }
  const auto dim = static_cast<std::size_t>(dim_v.get<std::int64_t>());

  const json& sig = member(doc, "", "signature");
  if (!sig.is_array()) fail("/signature", "expected an array");
  if (sig.size() != dim) fail("/signature", "length differs from dim");
  std::vector<int> eps;
  for (std::size_t a = 0; a < sig.size(); ++a) {
    const json& e = sig[a];
    if (!e.is_number_integer() || (e.get<int>() != 1 && e.get<int>() != -1)) {
      fail("/signature/" + std::to_string(a), "expected 1 or -1");
    }
    eps.push_back(e.get<int>());
  }
  Signature signature;
  try {
    signature = Signature(std::move(eps));
  } catch (const GeometryError& e) {
    fail("/signature", e.what());
  }

  std::vector<std::string> labels;
  if (const auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_array() || it->size() != dim) fail("/labels", "expected dim strings");
    std::set<std::string> seen;
    for (std::size_t a = 0; a < dim; ++a) {
      const json& l = (*it)[a];
      const std::string at = "/labels/" + std::to_string(a);
      if (!l.is_string() || l.get<std::string>().empty()) fail(at, "expected a nonempty string");
      if (!seen.insert(l.get<std::string>()).second) fail(at, "duplicate label");
      labels.push_back(l.get<std::string>());
    }
  }

  StructureTensor c(dim);
  const json& brackets = member(doc, "", "brackets");
  if (!brackets.is_array()) fail("/brackets", "expected an array");
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string at = "/brackets/" + std::to_string(b);
    const json& entry = brackets[b];
    if (!entry.is_object()) fail(at, "expected an object");
    only_keys(entry, at, {"i", "j", "terms"});
    const std::size_t i = index_value(member(entry, at, "i"), at + "/i", dim);
    const std::size_t j = index_value(member(entry, at, "j"), at + "/j", dim);
    if (i >= j) fail(at, "requires i < j");
    if (!pairs.insert({i, j}).second) fail(at, "duplicate pair");
    const json& terms = member(entry, at, "terms");
    if (!terms.is_object()) fail(at + "/terms", "expected an object");
    for (const auto& [key, value] : terms.items()) {
      const std::string tat = at + "/terms/" + key;
      std::size_t k = 0;
      try {
        std::size_t used = 0;
        const long kk = std::stol(key, &used);
        if (used != key.size() || kk < 1 || static_cast<std::size_t>(kk) > dim) throw 0;
        k = static_cast<std::size_t>(kk - 1);
      } catch (...) {
        fail(tat, "key must be an index in 1.." + std::to_string(dim));
      }
      if (!value.is_string()) fail(tat, "expected a coefficient string");
      const auto v = ExactScalar::parse(value.get<std::string>());
      if (!v) fail(tat, "cannot parse \"" + value.get<std::string>() + "\"");
      c.set_bracket(i, j, k, *v);
    }
  }
  return MetricLieAlgebra(name.get<std::string>(), std::move(signature), std::move(c),
                          std::move(labels));
}

}  // namespace liegeo
