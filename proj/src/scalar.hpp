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

#ifndef DERIVKIT_SCALAR_HPP
#define DERIVKIT_SCALAR_HPP

#include <complex>
#include <stdexcept>

#include "rational.hpp"

namespace derivkit {

// Bridge between the exact integer/rational coefficient world and whatever
// scalar a formula is being evaluated over. Every evaluation template in the
// library goes through these three hooks, so adding a scalar type is a single
// specialization.
template <typename S>
struct ScalarTraits {
  static S from_bigint(const BigInt& z) { return S(z); }
  static S from_rational(const Rational& q) { return S(q); }
  static S from_int(long n) { return S(n); }
};

template <>
struct ScalarTraits<Rational> {
  static Rational from_bigint(const BigInt& z) { return Rational(z); }
  static Rational from_rational(const Rational& q) { return q; }
  static Rational from_int(long n) { return Rational(n); }
};

template <>
struct ScalarTraits<double> {
  static double from_bigint(const BigInt& z) { return static_cast<double>(to_long_double(z)); }
  static double from_rational(const Rational& q) { return static_cast<double>(q.to_ld()); }
  static double from_int(long n) { return static_cast<double>(n); }
};

template <>
struct ScalarTraits<long double> {
  static long double from_bigint(const BigInt& z) { return to_long_double(z); }
  static long double from_rational(const Rational& q) { return q.to_ld(); }
  static long double from_int(long n) { return static_cast<long double>(n); }
};

template <typename F>
struct ScalarTraits<std::complex<F>> {
  static std::complex<F> from_bigint(const BigInt& z) {
    return std::complex<F>(ScalarTraits<F>::from_bigint(z), F(0));
  }
  static std::complex<F> from_rational(const Rational& q) {
    return std::complex<F>(ScalarTraits<F>::from_rational(q), F(0));
  }
  static std::complex<F> from_int(long n) {
    return std::complex<F>(static_cast<F>(n), F(0));
  }
};

template <typename S>
S scalar_from(const Rational& q) {
  return ScalarTraits<S>::from_rational(q);
}

template <typename S>
S scalar_from(const BigInt& z) {
  return ScalarTraits<S>::from_bigint(z);
}

inline double scalar_inverse(double v) {
  if (v == 0.0) throw std::domain_error("scalar_inverse: zero");
  return 1.0 / v;
}

inline long double scalar_inverse(long double v) {
  if (v == 0.0L) throw std::domain_error("scalar_inverse: zero");
  return 1.0L / v;
}

inline Rational scalar_inverse(const Rational& v) { return v.inverse(); }

template <typename F>
std::complex<F> scalar_inverse(const std::complex<F>& v) {
  if (v == std::complex<F>(0, 0)) throw std::domain_error("scalar_inverse: zero");
  return std::complex<F>(1, 0) / v;
}

}  // namespace derivkit

#endif  // DERIVKIT_SCALAR_HPP
