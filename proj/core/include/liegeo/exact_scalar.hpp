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

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace liegeo {

using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                  boost::multiprecision::et_off>;

/**
 * @brief Exact element a + b*sqrt(2) of the quadratic field Q(sqrt 2).
 *
 * Orthonormal bases of the catalog algebras (oscillator, sl(2,R), Killing-scaled
 * su(2)) need 1/sqrt(2) in their structure constants, so exact arithmetic is
 * carried out over Q(sqrt 2) rather than Q. Comparison is exact: the sign of
 * a + b*sqrt2 is decided by comparing a^2 with 2 b^2 when the signs differ.
 */
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(std::int64_t value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational a) : a_(std::move(a)) {}   // NOLINT(google-explicit-constructor)
  ExactScalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static ExactScalar sqrt2() { return {Rational(0), Rational(1)}; }
  static ExactScalar fraction(std::int64_t p, std::int64_t q) { return Rational(p, q); }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// -1, 0 or +1.
  int sign() const;
  double to_double() const;

  ExactScalar conjugate() const { return {a_, -b_}; }
  /// Field norm a^2 - 2 b^2 (rational).
  Rational norm() const { return a_ * a_ - 2 * b_ * b_; }

  /// Square root inside Q(sqrt 2) if it exists; requires a nonnegative value.
  std::optional<ExactScalar> sqrt() const;

  ExactScalar operator-() const { return {-a_, -b_}; }
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  /// Throws std::domain_error on division by zero.
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
  friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
  friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }
  friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }

  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const ExactScalar& x, const ExactScalar& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Canonical text: "p", "p/q", "b*sqrt2", "a+b*sqrt2", "a-b*sqrt2"; lowest terms.
  std::string to_string() const;
  /// Inverse of to_string(); also accepts non-canonical fractions like "2/4".
  static std::optional<ExactScalar> parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const ExactScalar& x) {
    return os << x.to_string();
  }

 private:
  Rational a_{0};
  Rational b_{0};
};

inline ExactScalar abs(const ExactScalar& x) { return x.sign() < 0 ? -x : x; }

/// Scalar helpers shared by the exact and floating-point code paths.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double to_double(double x) { return x; }
  static int sign(double x) { return (x > 0) - (x < 0); }
};

template <>
struct ScalarTraits<ExactScalar> {
  static constexpr bool exact = true;
  static double to_double(const ExactScalar& x) { return x.to_double(); }
  static int sign(const ExactScalar& x) { return x.sign(); }
};

}  // namespace liegeo
