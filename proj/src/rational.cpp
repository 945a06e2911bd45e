// Copyright 2026 The Farey Mosaics Authors
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

#include "farey/rational.hpp"

#include <ostream>

#include "farey/errors.hpp"

namespace farey {

std::string to_string(const BigInt& v) { return v.get_str(); }

Rational::Rational(std::int64_t n) : value_(static_cast<long>(n)) {}

Rational::Rational(const BigInt& n) : value_(n) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

BigInt parse_int(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw ParseError("not an integer: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    const auto dot = text.find('.');
    if (dot == std::string_view::npos) return Rational(parse_int(text));
    // Terminating decimal such as "0.25".
    std::string digits(text.substr(0, dot));
    std::string frac(text.substr(dot + 1));
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    BigInt whole = parse_int(digits);
    if (frac.empty()) return Rational(whole);
    BigInt f = parse_int(frac);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const bool negative = !digits.empty() && digits[0] == '-';
    BigInt num = whole * scale + (negative ? BigInt(-f) : f);
    return Rational(num, scale);
  }
  return Rational(parse_int(text.substr(0, slash)),
                  parse_int(text.substr(slash + 1)));
}

BigInt Rational::floor() const {
  return floor_div(value_.get_num(), value_.get_den());
}

BigInt Rational::ceil() const {
  return -floor_div(-value_.get_num(), value_.get_den());
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // Round half away from zero.
  BigInt num = value_.get_num();
  const BigInt den = value_.get_den();
  const bool negative = num < 0;
  if (negative) num = -num;
  BigInt scaled = (2 * num * scale + den) / (2 * den);
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(digits - f.size(), '0') + f;
  }
  return out;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace farey

std::size_t std::hash<farey::Rational>::operator()(
    const farey::Rational& r) const noexcept {
  const std::size_t h1 = mpz_get_ui(r.raw().get_num_mpz_t()) ^
                         (mpz_sgn(r.raw().get_num_mpz_t()) < 0 ? 0x9e37 : 0);
  const std::size_t h2 = mpz_get_ui(r.raw().get_den_mpz_t());
  return h1 * 1000003u ^ h2;
}
