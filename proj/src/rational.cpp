/*
   Copyright 2026 derivkit contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "rational.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace derivkit {

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt int_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

long double to_long_double(const BigInt& z) {
  return strtold(z.get_str().c_str(), nullptr);
}

Rational::Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
  if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

long double Rational::to_ld() const {
  return to_long_double(numerator()) / to_long_double(denominator());
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) return rational_pow(base.inverse(), -e);
  Rational acc(1), b = base;
  unsigned long n = static_cast<unsigned long>(e);
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

namespace {

bool is_integer_text(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  if (auto slash = text.find('/'); slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den)) return std::nullopt;
    BigInt d(den);
    if (sgn(d) == 0) return std::nullopt;
    return Rational(BigInt(num), d);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string head = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (head.empty() || head == "+" || head == "-") head += "0";
    if (!is_integer_text(head)) return std::nullopt;
    if (frac.empty() || !is_integer_text(frac) || frac[0] == '+' || frac[0] == '-')
      return std::nullopt;
    const bool negative = text[0] == '-';
    BigInt scale = int_pow(BigInt(10), frac.size());
    BigInt whole(head);
    BigInt numerator = whole * scale;
    BigInt frac_part(frac);
    numerator += negative ? -frac_part : frac_part;
    return Rational(numerator, scale);
  }
  if (!is_integer_text(text)) return std::nullopt;
  return Rational(BigInt(text));
}

}  // namespace derivkit
