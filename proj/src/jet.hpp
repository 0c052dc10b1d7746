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

#ifndef DERIVKIT_JET_HPP
#define DERIVKIT_JET_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fn_id.hpp"
#include "rational.hpp"
#include "scalar.hpp"

namespace derivkit {

// Truncated Taylor expansion of a function f at a base point x0:
// coeff(k) = f^{(k)}(x0) / k!. Arithmetic is closed under the truncation
// order, so x0-local derivatives of products, quotients and powers come out
// of plain jet algebra. This is the independent ground truth the closed-form
// evaluators are tested against; it shares no code path with them.
template <typename S>
class Jet {
 public:
  Jet(int order, std::vector<S> coeffs) : c_(std::move(coeffs)) {
    if (order < 0 || c_.size() != static_cast<size_t>(order) + 1)
      throw std::invalid_argument("Jet: order/coefficient mismatch");
  }

  static Jet constant(const S& v, int order) {
    std::vector<S> c(static_cast<size_t>(order) + 1, ScalarTraits<S>::from_int(0));
    c[0] = v;
    return Jet(order, std::move(c));
  }

  /// Jet of the identity function x -> x expanded at x0.
  static Jet variable(const S& x0, int order) {
    Jet j = constant(x0, order);
    if (order >= 1) j.c_[1] = ScalarTraits<S>::from_int(1);
    return j;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const S& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
  const std::vector<S>& coeffs() const { return c_; }

  friend Jet operator+(const Jet& a, const Jet& b) {
    a.check(b);
    Jet out = a;
    for (size_t k = 0; k < out.c_.size(); ++k) out.c_[k] = out.c_[k] + b.c_[k];
    return out;
  }

  friend Jet operator-(const Jet& a, const Jet& b) {
    a.check(b);
    Jet out = a;
    for (size_t k = 0; k < out.c_.size(); ++k) out.c_[k] = out.c_[k] - b.c_[k];
    return out;
  }

  Jet operator-() const {
    Jet out = *this;
    for (auto& v : out.c_) v = ScalarTraits<S>::from_int(0) - v;
    return out;
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    a.check(b);
    const int n = a.order();
    Jet out = constant(ScalarTraits<S>::from_int(0), n);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j)
        out.c_[i + j] = out.c_[i + j] + a.c_[i] * b.c_[j];
    return out;
  }

  /// Reciprocal; the constant term must be invertible (poles are the
  /// caller's business, there is no Laurent extension here).
  Jet recip() const {
    const S inv0 = scalar_inverse(c_[0]);
    const int n = order();
    Jet out = constant(inv0, n);
    for (int k = 1; k <= n; ++k) {
      S acc = ScalarTraits<S>::from_int(0);
      for (int j = 1; j <= k; ++j) acc = acc + c_[j] * out.c_[k - j];
      out.c_[k] = ScalarTraits<S>::from_int(0) - acc * inv0;
    }
    return out;
  }

  friend Jet operator/(const Jet& a, const Jet& b) { return a * b.recip(); }

  Jet pow_int(int e) const {
    if (e < 0) return recip().pow_int(-e);
    Jet acc = constant(ScalarTraits<S>::from_int(1), order());
    Jet base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  /// Termwise derivative; drops one order.
  Jet derivative() const {
    if (order() == 0) return constant(ScalarTraits<S>::from_int(0), 0);
    std::vector<S> out(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k)
      out[k - 1] = ScalarTraits<S>::from_int(static_cast<long>(k)) * c_[k];
    return Jet(order() - 1, std::move(out));
  }

  /// Termwise antiderivative; gains one order, constant term supplied.
  Jet integral(const S& value_at_x0) const {
    std::vector<S> out(c_.size() + 1);
    out[0] = value_at_x0;
    for (size_t k = 0; k < c_.size(); ++k) {
      S den = ScalarTraits<S>::from_int(static_cast<long>(k + 1));
      out[k + 1] = c_[k] * scalar_inverse(den);
    }
    return Jet(order() + 1, std::move(out));
  }

  /// k! * coeff(k), i.e. the k-th derivative at the base point.
  S derivative_value(int k) const {
    return scalar_from<S>(factorial(static_cast<unsigned long>(k))) * c_[static_cast<size_t>(k)];
  }

  /// Re-expands the truncated polynomial at base point + h.
  Jet shifted(const S& h) const {
    const int n = order();
    Jet out = constant(ScalarTraits<S>::from_int(0), n);
    for (int i = 0; i <= n; ++i) {
      S acc = ScalarTraits<S>::from_int(0);
      S hp = ScalarTraits<S>::from_int(1);
      for (int k = i; k <= n; ++k) {
        acc = acc + scalar_from<S>(binomial(static_cast<unsigned long>(k),
                                            static_cast<unsigned long>(i))) *
                        c_[static_cast<size_t>(k)] * hp;
        hp = hp * h;
      }
      out.c_[static_cast<size_t>(i)] = acc;
    }
    return out;
  }

 private:
  void check(const Jet& o) const {
    if (o.order() != order())
      throw std::invalid_argument("Jet: truncation orders differ");
  }

  std::vector<S> c_;
};

/// u^alpha for floating jets with u(x0) > 0, by the power-series ODE
/// u w' = alpha u' w:  k u0 w_k = sum_{i=1..k} (i(alpha+1) - k) u_i w_{k-i}.
Jet<long double> jet_pow_real(const Jet<long double>& u, long double alpha);

inline Jet<long double> jet_sqrt(const Jet<long double>& u) {
  return jet_pow_real(u, 0.5L);
}

/// exp(u) via w' = u' w.
Jet<long double> jet_exp(const Jet<long double>& u);

// ---- oracle entry points ------------------------------------------------

/// Floating-point jet of the named function at x0, seeded from host math.
/// Throws std::domain_error when x0 is within kSingularTol of a pole or
/// outside the function's domain.
Jet<long double> jet_of(FnId f, long double x0, int order, FnParams params = {});

/// Exact-rational Maclaurin jet (base point 0). Supported for the entire
/// functions sin, cos, exp, sinh, cosh and their algebraic combinations
/// tan, sec, sech; anything else throws std::domain_error.
Jet<Rational> exact_jet(FnId f, int order);

/// Exact Maclaurin coefficients, low to high.
std::vector<Rational> rational_series(FnId f, int order);

/// n-th derivative of f at x0, extracted from the floating jet.
double nth_derivative(FnId f, int n, double x0, FnParams params = {});

}  // namespace derivkit

#endif  // DERIVKIT_JET_HPP
