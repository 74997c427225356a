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
#include "liegeo/io.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <string>

using namespace liegeo;

namespace {

std::string error_text(std::string_view doc) {
  try {
    algebra_from_json(doc);
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::InvalidDocument);
    return e.what();
  }
  return "";
}

bool contains(const std::string& s, const std::string& part) {
  return s.find(part) != std::string::npos;
}

constexpr const char* kSu2 = R"({
  "brackets": [
    {"i": 1, "j": 2, "terms": {"3": "1"}},
    {"i": 1, "j": 3, "terms": {"2": "-1"}},
    {"i": 2, "j": 3, "terms": {"1": "1"}}
  ],
  "dim": 3,
  "name": "custom",
  "signature": [1, 1, 1]
})";

}  // namespace

TEST_CASE("catalog algebras round trip byte for byte") {
  for (const auto& id : test::catalog_algebra_ids()) {
    CAPTURE(id);
    const MetricLieAlgebra alg = catalog::catalog_algebra(id);
    const std::string text = algebra_to_json(alg);
    CHECK(text.back() == '\n');
    const MetricLieAlgebra back = algebra_from_json(text);
    CHECK(back.name() == alg.name());
    CHECK(back.signature() == alg.signature());
    CHECK(back.labels() == alg.labels());
    for (std::size_t i = 0; i < alg.dim(); ++i)
      for (std::size_t j = 0; j < alg.dim(); ++j)
        for (std::size_t k = 0; k < alg.dim(); ++k) CHECK(back.c(i, j, k) == alg.c(i, j, k));
    CHECK(algebra_to_json(back) == text);
  }
}

TEST_CASE("handwritten documents parse and are canonicalized") {
  const MetricLieAlgebra a = algebra_from_json(kSu2);
  CHECK(a.dim() == 3);
  CHECK(a.c(0, 1, 2) == ExactScalar(1));
  CHECK(a.c(1, 0, 2) == ExactScalar(-1));
  CHECK(a.labels().size() == 3);
  CHECK(algebra_to_json(a) == algebra_to_json(
                                  MetricLieAlgebra("custom", catalog::su2().signature(),
                                                   catalog::su2().structure(),
                                                   catalog::su2().labels())));

  const MetricLieAlgebra b = algebra_from_json(
      R"({"brackets":[{"i":1,"j":2,"terms":{"2":"2/4"}}],"dim":2,"name":"aff","signature":[1,1]})");
  CHECK(b.c(0, 1, 1).to_string() == "1/2");
  CHECK(contains(algebra_to_json(b), "\"1/2\""));

  const MetricLieAlgebra c = algebra_from_json(
      R"({"brackets":[{"i":1,"j":2,"terms":{"3":"1/2*sqrt2"}}],"dim":3,"name":"h",)"
      R"("signature":[1,1,-1],"labels":["P","Q","Z"]})");
  CHECK(c.c(0, 1, 2).to_string() == "1/2*sqrt2");
  CHECK(c.labels()[2] == "Z");
  CHECK(c.signature().lorentzian());
}

TEST_CASE("schema violations name the offending location") {
  CHECK(contains(error_text("{not json"), "algebra document /: malformed JSON"));
  CHECK(contains(error_text("[1, 2]"), "algebra document /: expected an object"));
  CHECK(contains(error_text(R"({"brackets":[],"dim":1,"name":"x","signature":[1],"extra":0})"),
                 "/extra: unknown key"));
  CHECK(contains(error_text(R"({"brackets":[],"dim":1,"signature":[1]})"), "/name: missing"));
  CHECK(contains(error_text(R"({"brackets":[],"dim":0,"name":"x","signature":[]})"), "/dim"));
  CHECK(contains(error_text(R"({"brackets":[],"dim":2,"name":"x","signature":[1]})"),
                 "/signature: length differs from dim"));
  CHECK(contains(error_text(R"({"brackets":[],"dim":2,"name":"x","signature":[1,2]})"),
                 "/signature/1: expected 1 or -1"));
  CHECK(contains(error_text(R"({"brackets":[],"dim":2,"name":"x","signature":[-1,-1]})"),
                 "/signature:"));
  CHECK(contains(error_text(R"({"brackets":[],"dim":2,"name":"x","signature":[1,1],)"
                            R"("labels":["a","a"]})"),
                 "/labels/1: duplicate label"));

  const std::string head = R"({"dim":3,"name":"x","signature":[1,1,1],"brackets":[)";
  CHECK(contains(error_text(head + R"({"i":1,"j":4,"terms":{}}]})"), "/brackets/0/j: index 4"));
  CHECK(contains(error_text(head + R"({"i":2,"j":1,"terms":{}}]})"),
                 "/brackets/0: requires i < j"));
  CHECK(contains(error_text(head + R"({"i":1,"j":2,"terms":{}},{"i":1,"j":2,"terms":{}}]})"),
                 "/brackets/1: duplicate pair"));
  CHECK(contains(error_text(head + R"({"i":1,"j":2,"terms":{"3":"one"}}]})"),
                 "/brackets/0/terms/3: cannot parse"));
  CHECK(contains(error_text(head + R"({"i":1,"j":2,"terms":{"3":1}}]})"),
                 "/brackets/0/terms/3: expected a coefficient string"));
  CHECK(contains(error_text(head + R"({"i":1,"j":2,"terms":{"x":"1"}}]})"),
                 "/brackets/0/terms/x: key must be an index"));
  CHECK(contains(error_text(head + R"({"i":1,"j":2,"terms":{},"k":0}]})"),
                 "/brackets/0/k: unknown key"));
  CHECK(contains(error_text(head + R"({"i":1.5,"j":2,"terms":{}}]})"),
                 "/brackets/0/i: expected an integer"));
}
