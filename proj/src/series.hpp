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

#ifndef DERIVKIT_SERIES_HPP
#define DERIVKIT_SERIES_HPP

#include <stdexcept>
#include <vector>

namespace derivkit {

/// Formal power series in t, truncated at t^order, with coefficients in an
/// arbitrary commutative ring C (Poly, ExtElem, Rational, ...).
///
/// C only has to provide +, -, * and ==. Because some coefficient rings
/// carry runtime state (ExtElem needs its sigma), the additive identity is
/// stored explicitly and used for padding.
template <typename C>
class SeriesInT {
 public:
  SeriesInT(int order, C zero)
      : order_(order), zero_(std::move(zero)),
        c_(static_cast<size_t>(order) + 1, zero_) {
    if (order < 0) throw std::invalid_argument("SeriesInT: negative order");
  }

  int order() const { return order_; }
  const C& coeff(int k) const {
    return (k >= 0 && k <= order_) ? c_[static_cast<size_t>(k)] : zero_;
  }
  void set_coeff(int k, C v) {
    if (k < 0 || k > order_) throw std::out_of_range("SeriesInT: index");
    c_[static_cast<size_t>(k)] = std::move(v);
  }

  SeriesInT& operator+=(const SeriesInT& o) {
    check(o);
    for (int k = 0; k <= order_; ++k) c_[k] = c_[k] + o.c_[k];
    return *this;
  }
  SeriesInT& operator-=(const SeriesInT& o) {
    check(o);
    for (int k = 0; k <= order_; ++k) c_[k] = c_[k] - o.c_[k];
    return *this;
  }
  friend SeriesInT operator+(SeriesInT a, const SeriesInT& b) { return a += b; }
  friend SeriesInT operator-(SeriesInT a, const SeriesInT& b) { return a -= b; }

  friend SeriesInT operator*(const SeriesInT& a, const SeriesInT& b) {
    a.check(b);
    SeriesInT out(a.order_, a.zero_);
    for (int i = 0; i <= a.order_; ++i)
      for (int j = 0; i + j <= a.order_; ++j)
        out.c_[i + j] = out.c_[i + j] + a.c_[i] * b.c_[j];
    return out;
  }

  SeriesInT pow(int e, const C& one) const {
    if (e < 0) throw std::invalid_argument("SeriesInT: negative power");
    SeriesInT acc(order_, zero_);
    acc.c_[0] = one;
    SeriesInT base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  /// Reciprocal of a series whose constant coefficient equals `one`;
  /// computed with ring operations only.
  SeriesInT recip_unit(const C& one) const {
    if (!(c_[0] == one))
      throw std::invalid_argument("SeriesInT: reciprocal needs unit constant term");
    SeriesInT out(order_, zero_);
    out.c_[0] = one;
    for (int k = 1; k <= order_; ++k) {
      C acc = zero_;
      for (int j = 1; j <= k; ++j) acc = acc + c_[j] * out.c_[k - j];
      out.c_[k] = zero_ - acc;
    }
    return out;
  }

 private:
  void check(const SeriesInT& o) const {
    if (o.order_ != order_)
      throw std::invalid_argument("SeriesInT: truncation orders differ");
  }

  int order_;
  C zero_;
  std::vector<C> c_;
};

}  // namespace derivkit

#endif  // DERIVKIT_SERIES_HPP
