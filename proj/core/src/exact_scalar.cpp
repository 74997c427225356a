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

#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace liegeo {

namespace {

using boost::multiprecision::cpp_int;

int rational_sign(const Rational& r) { return r.sign(); }

std::optional<cpp_int> integer_sqrt(const cpp_int& v) {
  if (v < 0) return std::nullopt;
  cpp_int root = boost::multiprecision::sqrt(v);
  if (root * root != v) return std::nullopt;
  return root;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  auto num = integer_sqrt(boost::multiprecision::numerator(r));
  auto den = integer_sqrt(boost::multiprecision::denominator(r));
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

std::string rational_text(const Rational& r) {
  const cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<Rational> parse_rational(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t pos = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    pos = 1;
  }
  auto digits = [&](std::size_t start, std::size_t end) -> std::optional<cpp_int> {
    if (start >= end) return std::nullopt;
    for (std::size_t i = start; i < end; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    }
    return cpp_int(std::string(s.substr(start, end - start)));
  };
  const std::size_t slash = s.find('/', pos);
  auto num = digits(pos, slash == std::string_view::npos ? s.size() : slash);
  if (!num) return std::nullopt;
  cpp_int den = 1;
  if (slash != std::string_view::npos) {
    auto d = digits(slash + 1, s.size());
    if (!d || *d == 0) return std::nullopt;
    den = *d;
  }
  Rational r(*num, den);
  return negative ? Rational(-r) : r;
}

}  // namespace

int ExactScalar::sign() const {
  const int sa = rational_sign(a_);
  const int sb = rational_sign(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with 2 b^2.
  const Rational diff = a_ * a_ - 2 * b_ * b_;
  const int sd = rational_sign(diff);
  return sd == 0 ? 0 : (sd > 0 ? sa : sb);
}

double ExactScalar::to_double() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * std::numbers::sqrt2;
}

std::optional<ExactScalar> ExactScalar::sqrt() const {
  if (sign() < 0) return std::nullopt;
  if (is_zero()) return ExactScalar{};
  if (b_ == 0) {
    if (auto r = rational_sqrt(a_)) return ExactScalar(*r);
    if (auto r = rational_sqrt(a_ / 2)) return ExactScalar(Rational(0), *r);
    return std::nullopt;
  }
  // (x + y sqrt2)^2 = a + b sqrt2  <=>  x^2 + 2 y^2 = a, 2 x y = b.
  auto disc = rational_sqrt(a_ * a_ - 2 * b_ * b_);
  if (!disc) return std::nullopt;
  for (const Rational& x2 : {(a_ + *disc) / 2, (a_ - *disc) / 2}) {
    if (x2 <= 0) continue;
    auto x = rational_sqrt(x2);
    if (!x) continue;
    ExactScalar root(*x, b_ / (2 * *x));
    if (root * root != *this) continue;
    return root.sign() < 0 ? -root : root;
  }
  return std::nullopt;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (o.b_ == 0) {
    a_ *= o.a_;
    b_ *= o.a_;
    return *this;
  }
  Rational a = a_ * o.a_ + 2 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw std::domain_error("ExactScalar: division by zero");
  if (o.b_ == 0) {
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  const Rational n = o.norm();
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

std::string ExactScalar::to_string() const {
  if (b_ == 0) return rational_text(a_);
  std::string surd = (b_ == 1) ? "sqrt2" : (b_ == -1 ? "-sqrt2" : rational_text(b_) + "*sqrt2");
  if (a_ == 0) return surd;
  if (b_ > 0) return rational_text(a_) + "+" + surd;
  return rational_text(a_) + surd;
}

std::optional<ExactScalar> ExactScalar::parse(std::string_view text) {
  constexpr std::string_view kSurd = "sqrt2";
  if (text.size() < kSurd.size() || text.substr(text.size() - kSurd.size()) != kSurd) {
    auto r = parse_rational(text);
    if (!r) return std::nullopt;
    return ExactScalar(*r);
  }
  std::string_view body = text.substr(0, text.size() - kSurd.size());
  bool explicit_coefficient = false;
  if (!body.empty() && body.back() == '*') {
    body.remove_suffix(1);
    explicit_coefficient = true;
  }
  // Split "a+b" / "a-b": last sign that is not the leading character.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '/') {
      split = i;
      break;
    }
  }
  Rational a = 0;
  std::string_view coeff = body;
  if (split != std::string_view::npos) {
    auto r = parse_rational(body.substr(0, split));
    if (!r) return std::nullopt;
    a = *r;
    coeff = body.substr(split);
  }
  Rational b;
  if (coeff.empty() || coeff == "+" || coeff == "-") {
    if (explicit_coefficient) return std::nullopt;
    b = coeff == "-" ? -1 : 1;
  } else {
    if (!explicit_coefficient) return std::nullopt;
    auto r = parse_rational(coeff);
    if (!r) return std::nullopt;
    b = *r;
  }
  return ExactScalar(a, b);
}

}  // namespace liegeo
