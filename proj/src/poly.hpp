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

#ifndef DERIVKIT_POLY_HPP
#define DERIVKIT_POLY_HPP

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace derivkit {

/// Dense univariate polynomial with exact rational coefficients,
/// coefficient i belonging to xi^i.
///
/// Canonical form: no trailing zero coefficients; the zero polynomial is the
/// empty coefficient vector and reports degree() == -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& c);
  Poly(std::initializer_list<Rational> low_to_high);
  explicit Poly(std::vector<Rational> low_to_high);

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(Rational(1)); }
  static Poly variable();                    // xi
  static Poly monomial(int degree, const Rational& c);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  /// Coefficient of xi^i; zero beyond the degree.
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& p);
  friend Poly operator*(const Poly& p, const Rational& s) { return s * p; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const;

  /// Exact quotient when `d` divides this polynomial; nullopt otherwise.
  std::optional<Poly> divide_exact(const Poly& d) const;

  template <typename S>
  S eval(const S& x) const {
    S acc = ScalarTraits<S>::from_int(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * x + scalar_from<S>(*it);
    return acc;
  }

  /// True when every term has degree congruent to `parity` mod 2.
  bool has_parity(int parity) const;

  std::string str(const std::string& var = "xi") const;
  friend std::ostream& operator<<(std::ostream& os, const Poly& p);

 private:
  void trim();
  std::vector<Rational> c_;
};

template <>
struct ScalarTraits<Poly> {
  static Poly from_bigint(const BigInt& z) { return Poly(Rational(z)); }
  static Poly from_rational(const Rational& q) { return Poly(q); }
  static Poly from_int(long n) { return Poly(Rational(n)); }
};

}  // namespace derivkit

#endif  // DERIVKIT_POLY_HPP
