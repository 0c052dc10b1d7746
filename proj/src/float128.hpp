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

#ifndef DERIVKIT_FLOAT128_HPP
#define DERIVKIT_FLOAT128_HPP

// Quad-precision scalar support for the evaluators whose closed forms are
// exponentially ill-conditioned (the sech family: term magnitudes grow like
// e^{2x k} k! against an O(e^{-x}) result, so the cancellation eats ~10
// decimal digits at m = 12, x ~ 2). 113 mantissa bits leave the published
// tolerances with orders of magnitude to spare.

#include <quadmath.h>

#include "scalar.hpp"

namespace derivkit {

inline __float128 to_float128(const BigInt& z) {
  return strtoflt128(z.get_str().c_str(), nullptr);
}

template <>
struct ScalarTraits<__float128> {
  static __float128 from_bigint(const BigInt& z) { return to_float128(z); }
  static __float128 from_rational(const Rational& q) {
    return to_float128(q.numerator()) / to_float128(q.denominator());
  }
  static __float128 from_int(long n) { return static_cast<__float128>(n); }
};

}  // namespace derivkit

#endif  // DERIVKIT_FLOAT128_HPP
