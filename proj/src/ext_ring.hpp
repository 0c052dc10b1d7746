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

#ifndef DERIVKIT_EXT_RING_HPP
#define DERIVKIT_EXT_RING_HPP

#include <iosfwd>
#include <string>

#include "poly.hpp"

namespace derivkit {

/// The two quadratic extensions the derivative recurrences live in.
enum class Sigma { one_plus_xi2, one_minus_xi2 };

Poly sigma_poly(Sigma s);

/// Element a(xi) + b(xi)*s of Q(xi)[s]/(s^2 - sigma(xi)).
///
/// Keeps radical-bearing intermediates exact: s stands for sqrt(1+xi^2) or
/// sqrt(1-xi^2) and is never evaluated until eval() substitutes a concrete
/// value satisfying s^2 = sigma(xi).
class ExtElem {
 public:
  ExtElem(Poly a, Poly b, Sigma sigma)
      : a_(std::move(a)), b_(std::move(b)), sigma_(sigma) {}

  static ExtElem from_a(Poly a, Sigma sigma) { return ExtElem(std::move(a), Poly(), sigma); }
  static ExtElem zero(Sigma sigma) { return ExtElem(Poly(), Poly(), sigma); }
  static ExtElem one(Sigma sigma) { return ExtElem(Poly::one(), Poly(), sigma); }

  const Poly& a() const { return a_; }
  const Poly& b() const { return b_; }
  Sigma sigma() const { return sigma_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  ExtElem& operator+=(const ExtElem& o);
  ExtElem& operator-=(const ExtElem& o);
  friend ExtElem operator+(ExtElem a, const ExtElem& b) { return a += b; }
  friend ExtElem operator-(ExtElem a, const ExtElem& b) { return a -= b; }
  friend ExtElem operator*(const ExtElem& x, const ExtElem& y);
  friend ExtElem operator*(const Rational& s, const ExtElem& e);
  ExtElem operator-() const { return ExtElem(-a_, -b_, sigma_); }

  friend bool operator==(const ExtElem& x, const ExtElem& y) {
    return x.sigma_ == y.sigma_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const ExtElem& x, const ExtElem& y) { return !(x == y); }

  /// Substitutes xi and s; the caller supplies s with s^2 = sigma(xi).
  template <typename S>
  S eval(const S& xi, const S& s) const {
    return a_.eval(xi) + b_.eval(xi) * s;
  }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const ExtElem& e);

 private:
  Poly a_, b_;
  Sigma sigma_;
};

/// First-order operators of the form sign * w * d/dxi acting on the ring,
/// where the weight w is either a polynomial or the radical s itself.
struct DOperator {
  enum class Weight { poly, s };
  Weight weight_kind;
  Poly weight;  // ignored for Weight::s
  int sign;     // +1 or -1

  static DOperator poly_weight(Poly w, int sign) {
    return DOperator{Weight::poly, std::move(w), sign};
  }
  static DOperator s_weight(int sign) {
    return DOperator{Weight::s, Poly(), sign};
  }
};

/// One application of `op` to `e`, using d/dxi(s) = sigma'(xi) / (2 s).
///
/// For a polynomial weight w the image stays in the ring only when
/// w * sigma' is divisible by 2 * sigma; throws std::invalid_argument when
/// the pairing violates that closure. The s-weighted operator always closes:
///   sign * s * d(a + b s) = sign * (b' sigma + b sigma'/2) + sign * a' s.
ExtElem ext_apply_d(const ExtElem& e, const DOperator& op);

}  // namespace derivkit

#endif  // DERIVKIT_EXT_RING_HPP
