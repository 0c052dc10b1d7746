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

#include "ext_ring.hpp"

#include <ostream>
#include <stdexcept>

namespace derivkit {

Poly sigma_poly(Sigma s) {
  switch (s) {
    case Sigma::one_plus_xi2:
      return Poly({Rational(1), Rational(0), Rational(1)});
    case Sigma::one_minus_xi2:
      return Poly({Rational(1), Rational(0), Rational(-1)});
  }
  throw std::logic_error("sigma_poly: bad enum");
}

namespace {
void require_same_ring(const ExtElem& x, const ExtElem& y) {
  if (x.sigma() != y.sigma())
    throw std::invalid_argument("ExtElem: mixed extension rings");
}
}  // namespace

ExtElem& ExtElem::operator+=(const ExtElem& o) {
  require_same_ring(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

ExtElem& ExtElem::operator-=(const ExtElem& o) {
  require_same_ring(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

ExtElem operator*(const ExtElem& x, const ExtElem& y) {
  require_same_ring(x, y);
  const Poly sig = sigma_poly(x.sigma_);
  // (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 sigma + (a1 b2 + a2 b1) s
  Poly a = x.a_ * y.a_ + x.b_ * y.b_ * sig;
  Poly b = x.a_ * y.b_ + x.b_ * y.a_;
  return ExtElem(std::move(a), std::move(b), x.sigma_);
}

ExtElem operator*(const Rational& s, const ExtElem& e) {
  return ExtElem(s * e.a_, s * e.b_, e.sigma_);
}

std::string ExtElem::str() const {
  std::string out = a_.str();
  if (!b_.is_zero()) out += " + (" + b_.str() + ")*s";
  return out;
}

std::ostream& operator<<(std::ostream& os, const ExtElem& e) {
  return os << e.str();
}

ExtElem ext_apply_d(const ExtElem& e, const DOperator& op) {
  const Poly sig = sigma_poly(e.sigma());
  const Poly sig_d = sig.derivative();
  const Rational c(op.sign);
  const Poly da = e.a().derivative();
  const Poly db = e.b().derivative();

  if (op.weight_kind == DOperator::Weight::s) {
    // sign * s * (a' + b' s + b sigma'/(2s))
    //   = sign * (b' sigma + b sigma'/2) + sign * a' s
    Poly half_sig_d = Rational(1, 2) * sig_d;
    Poly a_out = c * (db * sig + e.b() * half_sig_d);
    Poly b_out = c * da;
    return ExtElem(std::move(a_out), std::move(b_out), e.sigma());
  }

  // sign * w * (a' + b' s + b sigma' s / (2 sigma)) requires
  // (w * sigma') / (2 sigma) to be a polynomial.
  Poly two_sig = Rational(2) * sig;
  auto ratio = (op.weight * sig_d).divide_exact(two_sig);
  if (!ratio)
    throw std::invalid_argument(
        "ext_apply_d: weight/sigma pairing does not close in the ring");
  Poly a_out = c * (op.weight * da);
  Poly b_out = c * (op.weight * db + *ratio * e.b());
  return ExtElem(std::move(a_out), std::move(b_out), e.sigma());
}

}  // namespace derivkit
