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

#ifndef DERIVKIT_RATIONAL_HPP
#define DERIVKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

namespace derivkit {

using BigInt = mpz_class;

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigInt int_pow(const BigInt& base, unsigned long e);

/// Converts through a decimal string so the full 64-bit mantissa of the
/// extended type is used (mpz_get_d would truncate to 53 bits).
long double to_long_double(const BigInt& z);

/// Exact fraction over GMP integers.
///
/// Invariants: always in lowest terms, denominator > 0, zero is 0/1.
/// Construction canonicalizes; arithmetic preserves the invariants.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den);

  const BigInt numerator() const { return v_.get_num(); }
  const BigInt denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_negative() const { return sgn(v_) < 0; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  Rational operator-() const;

  /// Multiplicative inverse; throws std::domain_error on zero.
  Rational inverse() const;

  Rational abs() const;

  double to_double() const { return v_.get_d(); }
  long double to_ld() const;

  /// Canonical text form: "p/q", or just "p" when the value is an integer.
  std::string str() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

Rational rational_pow(const Rational& base, long e);

/// Parses "p", "p/q" or a plain decimal like "-0.25" into an exact value;
/// nullopt on anything else (no exponent notation).
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace derivkit

#endif  // DERIVKIT_RATIONAL_HPP
