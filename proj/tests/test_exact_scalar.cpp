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

#include "liegeo/exact_scalar.hpp"
#include "liegeo/exact_linalg.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using liegeo::ExactScalar;
using liegeo::Rational;

namespace {

ExactScalar q(std::int64_t p, std::int64_t r = 1) { return ExactScalar::fraction(p, r); }
ExactScalar surd(Rational a, Rational b) { return {std::move(a), std::move(b)}; }

}  // namespace

TEST_CASE("field arithmetic in Q(sqrt 2)") {
  const ExactScalar s = ExactScalar::sqrt2();
  CHECK(s * s == q(2));
  CHECK((q(1) + s) * (q(1) - s) == q(-1));
  CHECK(q(1) / (q(1) + s) == surd(-1, 1));
  CHECK((q(3, 2) - q(1, 2)) == q(1));
  CHECK_THROWS_AS(q(1) / q(0), std::domain_error);
}

TEST_CASE("sign and ordering") {
  const ExactScalar s = ExactScalar::sqrt2();
  CHECK((q(3) - q(2) * s).sign() == 1);   // 3 > 2.828
  CHECK((q(1) - s).sign() == -1);
  CHECK((q(-3) + q(2) * s).sign() == -1);
  CHECK(q(0).sign() == 0);
  CHECK(q(7, 5) < s);
  CHECK(q(3, 2) > s);
}

TEST_CASE("canonical text") {
  CHECK(q(2, 4).to_string() == "1/2");
  CHECK(q(-3).to_string() == "-3");
  CHECK(ExactScalar::sqrt2().to_string() == "sqrt2");
  CHECK((-ExactScalar::sqrt2()).to_string() == "-sqrt2");
  CHECK(surd(1, 1).to_string() == "1+sqrt2");
  CHECK(surd(Rational(3, 2), Rational(-1, 3)).to_string() == "3/2-1/3*sqrt2");
  CHECK(surd(0, Rational(1, 2)).to_string() == "1/2*sqrt2");
  CHECK(ExactScalar::parse("2/4")->to_string() == "1/2");
  CHECK_FALSE(ExactScalar::parse("").has_value());
  CHECK_FALSE(ExactScalar::parse("1/0").has_value());
  CHECK_FALSE(ExactScalar::parse("abc").has_value());
  CHECK_FALSE(ExactScalar::parse("1+sqrt3").has_value());
}

TEST_CASE("text round trip over random elements") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int i = 0; i < 500; ++i) {
    const int den_a = 1 + (d(rng) + 50) % 13;
    const int den_b = 1 + (d(rng) + 50) % 11;
    const ExactScalar x(Rational(d(rng), den_a), Rational(d(rng), den_b));
    const auto back = ExactScalar::parse(x.to_string());
    REQUIRE(back.has_value());
    CHECK(*back == x);
    CHECK(back->to_string() == x.to_string());
  }
}

TEST_CASE("square roots stay inside the field when they exist") {
  CHECK(q(2).sqrt() == ExactScalar::sqrt2());
  CHECK(q(1, 4).sqrt() == q(1, 2));
  CHECK(surd(3, 2).sqrt() == surd(1, 1));
  CHECK_FALSE(q(3).sqrt().has_value());
  CHECK(q(0).sqrt() == q(0));
}

TEST_CASE("to_double agrees with the value") {
  CHECK(surd(1, 1).to_double() == doctest::Approx(2.414213562373095).epsilon(1e-15));
  CHECK(q(-7, 8).to_double() == -0.875);
}

TEST_CASE("exact linear algebra") {
  using liegeo::exact::ExactMatrix;
  ExactMatrix m(3, 3);
  m(0, 0) = q(2);
  m(0, 1) = q(1);
  m(1, 1) = ExactScalar::sqrt2();
  m(2, 0) = q(4);
  m(2, 1) = q(2);
  // Row 2 is twice row 0.
  CHECK(liegeo::exact::rank(m) == 2);
  CHECK(liegeo::exact::determinant(m).is_zero());
  const auto ns = liegeo::exact::nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK_FALSE(liegeo::exact::inverse(m).has_value());
  m(2, 2) = q(1);
  const auto inv = liegeo::exact::inverse(m);
  REQUIRE(inv.has_value());
  const ExactMatrix id = liegeo::exact::multiply(m, *inv);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(id(i, j) == q(i == j ? 1 : 0));
  }
}
