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

#include "jet.hpp"

#include <cmath>

namespace derivkit {

namespace {

using LD = long double;

// sin(x0 + t): coefficient k is sin(x0 + k*pi/2)/k!, realized by the
// quadrant cycle sin, cos, -sin, -cos instead of floating pi/2 additions.
Jet<LD> sin_jet(LD x0, int order) {
  const LD s = std::sin(x0), c = std::cos(x0);
  const LD cycle[4] = {s, c, -s, -c};
  std::vector<LD> v(static_cast<size_t>(order) + 1);
  LD fact = 1.0L;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) fact *= static_cast<LD>(k);
    v[static_cast<size_t>(k)] = cycle[k % 4] / fact;
  }
  return Jet<LD>(order, std::move(v));
}

Jet<LD> cos_jet(LD x0, int order) {
  const LD s = std::sin(x0), c = std::cos(x0);
  const LD cycle[4] = {c, -s, -c, s};
  std::vector<LD> v(static_cast<size_t>(order) + 1);
  LD fact = 1.0L;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) fact *= static_cast<LD>(k);
    v[static_cast<size_t>(k)] = cycle[k % 4] / fact;
  }
  return Jet<LD>(order, std::move(v));
}

Jet<LD> exp_jet(LD x0, int order) {
  std::vector<LD> v(static_cast<size_t>(order) + 1);
  LD fact = 1.0L;
  const LD e = std::exp(x0);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) fact *= static_cast<LD>(k);
    v[static_cast<size_t>(k)] = e / fact;
  }
  return Jet<LD>(order, std::move(v));
}

Jet<LD> sinh_jet(LD x0, int order) {
  const LD sh = std::sinh(x0), ch = std::cosh(x0);
  std::vector<LD> v(static_cast<size_t>(order) + 1);
  LD fact = 1.0L;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) fact *= static_cast<LD>(k);
    v[static_cast<size_t>(k)] = ((k % 2 == 0) ? sh : ch) / fact;
  }
  return Jet<LD>(order, std::move(v));
}

Jet<LD> cosh_jet(LD x0, int order) {
  const LD sh = std::sinh(x0), ch = std::cosh(x0);
  std::vector<LD> v(static_cast<size_t>(order) + 1);
  LD fact = 1.0L;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) fact *= static_cast<LD>(k);
    v[static_cast<size_t>(k)] = ((k % 2 == 0) ? ch : sh) / fact;
  }
  return Jet<LD>(order, std::move(v));
}

void require_away_from(LD value, const char* what) {
  if (std::fabs(value) < static_cast<LD>(kSingularTol))
    throw std::domain_error(std::string("jet_of: base point within tolerance of a pole (") +
                            what + " vanishes)");
}

// 1 + x^2 expanded at x0, as a jet of the requested order.
Jet<LD> one_plus_sq_jet(LD x0, int order) {
  auto x = Jet<LD>::variable(x0, order);
  return Jet<LD>::constant(1.0L, order) + x * x;
}

}  // namespace

Jet<long double> jet_pow_real(const Jet<long double>& u, long double alpha) {
  const LD u0 = u.coeff(0);
  if (u0 <= 0.0L)
    throw std::domain_error("jet_pow_real: needs positive constant term");
  const int n = u.order();
  std::vector<LD> w(static_cast<size_t>(n) + 1, 0.0L);
  w[0] = std::pow(u0, alpha);
  for (int k = 1; k <= n; ++k) {
    LD acc = 0.0L;
    for (int i = 1; i <= k; ++i)
      acc += (static_cast<LD>(i) * (alpha + 1.0L) - static_cast<LD>(k)) *
             u.coeff(i) * w[static_cast<size_t>(k - i)];
    w[static_cast<size_t>(k)] = acc / (static_cast<LD>(k) * u0);
  }
  return Jet<LD>(n, std::move(w));
}

Jet<long double> jet_exp(const Jet<long double>& u) {
  const int n = u.order();
  std::vector<LD> w(static_cast<size_t>(n) + 1, 0.0L);
  w[0] = std::exp(u.coeff(0));
  for (int k = 1; k <= n; ++k) {
    LD acc = 0.0L;
    for (int i = 1; i <= k; ++i)
      acc += static_cast<LD>(i) * u.coeff(i) * w[static_cast<size_t>(k - i)];
    w[static_cast<size_t>(k)] = acc / static_cast<LD>(k);
  }
  return Jet<LD>(n, std::move(w));
}

Jet<long double> jet_of(FnId f, long double x0, int order, FnParams params) {
  if (order < 0) throw std::invalid_argument("jet_of: negative order");
  switch (f) {
    case FnId::sin:
      return sin_jet(x0, order);
    case FnId::cos:
      return cos_jet(x0, order);
    case FnId::exp:
      return exp_jet(x0, order);
    case FnId::sinh:
      return sinh_jet(x0, order);
    case FnId::cosh:
      return cosh_jet(x0, order);
    case FnId::tan:
      require_away_from(std::cos(x0), "cos");
      return sin_jet(x0, order) / cos_jet(x0, order);
    case FnId::sec:
      require_away_from(std::cos(x0), "cos");
      return cos_jet(x0, order).recip();
    case FnId::cot:
      require_away_from(std::sin(x0), "sin");
      return cos_jet(x0, order) / sin_jet(x0, order);
    case FnId::sech:
      return cosh_jet(x0, order).recip();
    case FnId::lorentz:
      return one_plus_sq_jet(x0, order).recip();
    case FnId::lorentz_pow:
      return jet_pow_real(one_plus_sq_jet(x0, order), -static_cast<LD>(params.nu));
    case FnId::sech_pow:
      return jet_pow_real(cosh_jet(x0, order), -static_cast<LD>(params.nu));
    case FnId::cos_pow:
      if (params.j < 0) throw std::domain_error("jet_of: cos_pow needs j >= 0");
      return cos_jet(x0, order).pow_int(params.j);
    case FnId::arctan: {
      // d/dx arctan = 1/(1+x^2); integrate, seeding the constant term.
      if (order == 0) return Jet<LD>::constant(std::atan(x0), 0);
      auto d = one_plus_sq_jet(x0, order - 1).recip();
      return d.integral(std::atan(x0));
    }
    case FnId::arccos: {
      if (std::fabs(x0) >= 1.0L - static_cast<LD>(kSingularTol))
        throw std::domain_error("jet_of: arccos needs |x| < 1");
      if (order == 0) return Jet<LD>::constant(std::acos(x0), 0);
      auto x = Jet<LD>::variable(x0, order - 1);
      auto one = Jet<LD>::constant(1.0L, order - 1);
      auto d = -(jet_sqrt(one - x * x).recip());
      return d.integral(std::acos(x0));
    }
  }
  throw std::logic_error("jet_of: bad enum");
}

Jet<Rational> exact_jet(FnId f, int order) {
  if (order < 0) throw std::invalid_argument("exact_jet: negative order");
  const size_t n = static_cast<size_t>(order) + 1;
  auto alternating = [&](bool odd_slots) {
    // sin: 0, 1, 0, -1/3!, ... / cos: 1, 0, -1/2!, 0, ...
    std::vector<Rational> v(n, Rational(0));
    for (size_t k = odd_slots ? 1 : 0; k < n; k += 2) {
      Rational c = Rational(1, 1) / Rational(factorial(static_cast<unsigned long>(k)));
      if ((k / 2) % 2 == 1) c = -c;
      v[k] = c;
    }
    return Jet<Rational>(order, std::move(v));
  };
  auto hyperbolic = [&](bool odd_slots) {
    std::vector<Rational> v(n, Rational(0));
    for (size_t k = odd_slots ? 1 : 0; k < n; k += 2)
      v[k] = Rational(1) / Rational(factorial(static_cast<unsigned long>(k)));
    return Jet<Rational>(order, std::move(v));
  };
  switch (f) {
    case FnId::sin:
      return alternating(true);
    case FnId::cos:
      return alternating(false);
    case FnId::sinh:
      return hyperbolic(true);
    case FnId::cosh:
      return hyperbolic(false);
    case FnId::exp: {
      std::vector<Rational> v(n);
      for (size_t k = 0; k < n; ++k)
        v[k] = Rational(1) / Rational(factorial(static_cast<unsigned long>(k)));
      return Jet<Rational>(order, std::move(v));
    }
    case FnId::tan:
      return exact_jet(FnId::sin, order) / exact_jet(FnId::cos, order);
    case FnId::sec:
      return exact_jet(FnId::cos, order).recip();
    case FnId::sech:
      return exact_jet(FnId::cosh, order).recip();
    case FnId::cot:
      throw std::domain_error("exact_jet: cot has a pole at 0");
    default:
      throw std::domain_error("exact_jet: function not supported in exact mode");
  }
}

std::vector<Rational> rational_series(FnId f, int order) {
  return exact_jet(f, order).coeffs();
}

double nth_derivative(FnId f, int n, double x0, FnParams params) {
  if (n < 0) throw std::invalid_argument("nth_derivative: negative order");
  auto j = jet_of(f, static_cast<long double>(x0), n, params);
  return static_cast<double>(j.derivative_value(n));
}

}  // namespace derivkit
