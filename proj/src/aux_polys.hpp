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

#ifndef DERIVKIT_AUX_POLYS_HPP
#define DERIVKIT_AUX_POLYS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "poly.hpp"
#include "scalar.hpp"

namespace derivkit {

// The auxiliary families behind every closed-form evaluator in this library:
//
//   H_n(x,y) = n! sum_{r<=n/2} x^(n-2r) y^r / ((n-2r)! r!)      two-variable Hermite
//   P_n(x,y) = n! sum_{r<=n/2} x^(n-2r) y^r (n-r)! / ((n-2r)! r!)
//   P_n^nu(x,y) = n! sum_r x^(n-2r) y^r rf(nu, n-r) / ((n-2r)! r!)
//   P_n(z)   = n! sum_r (-1)^r z^(n-2r) (n-r)! / ((n-2r)! r!)    one-variable slice
//
// where rf(nu,k) = nu (nu+1) ... (nu+k-1) carries Gamma(nu+n-r)/Gamma(nu)
// as a plain product, so rational arguments stay exact. P_{-1} == 0 by
// convention, which makes the k*P_{k-1} terms in the evaluators total.

/// n! / ((n-2r)! r!) -- the H_n term weight.
BigInt hermite2_coeff(int n, int r);

/// n! (n-r)! / ((n-2r)! r!) -- the P_n term weight.
BigInt pn_coeff(int n, int r);

template <typename S>
S hermite2(int n, const S& x, const S& y) {
  if (n < 0) throw std::domain_error("hermite2: negative order");
  S acc = ScalarTraits<S>::from_int(0);
  std::vector<S> xp{ScalarTraits<S>::from_int(1)};
  for (int i = 1; i <= n; ++i) xp.push_back(xp.back() * x);
  S yp = ScalarTraits<S>::from_int(1);
  for (int r = 0; 2 * r <= n; ++r) {
    acc = acc + scalar_from<S>(hermite2_coeff(n, r)) * xp[static_cast<size_t>(n - 2 * r)] * yp;
    yp = yp * y;
  }
  return acc;
}

template <typename S>
S pn(int n, const S& x, const S& y) {
  if (n == -1) return ScalarTraits<S>::from_int(0);
  if (n < 0) throw std::domain_error("pn: order below -1");
  S acc = ScalarTraits<S>::from_int(0);
  std::vector<S> xp{ScalarTraits<S>::from_int(1)};
  for (int i = 1; i <= n; ++i) xp.push_back(xp.back() * x);
  S yp = ScalarTraits<S>::from_int(1);
  for (int r = 0; 2 * r <= n; ++r) {
    acc = acc + scalar_from<S>(pn_coeff(n, r)) * xp[static_cast<size_t>(n - 2 * r)] * yp;
    yp = yp * y;
  }
  return acc;
}

namespace detail {
bool is_nonpositive_integer(const Rational& v);
bool is_nonpositive_integer(double v);
bool is_nonpositive_integer(long double v);
#if defined(__SIZEOF_FLOAT128__)
inline bool is_nonpositive_integer(__float128 v) {
  const long double ld = static_cast<long double>(v);
  return is_nonpositive_integer(ld) && static_cast<__float128>(ld) == v;
}
#endif
}  // namespace detail

/// rf(nu, k) = nu (nu+1) ... (nu+k-1); empty product for k == 0.
template <typename S>
S rising_factorial(const S& nu, int k) {
  S acc = ScalarTraits<S>::from_int(1);
  for (int i = 0; i < k; ++i) acc = acc * (nu + ScalarTraits<S>::from_int(i));
  return acc;
}

template <typename S>
S pn_nu(int n, const S& nu, const S& x, const S& y) {
  if (detail::is_nonpositive_integer(nu))
    throw std::domain_error("pn_nu: nu must not be a non-positive integer");
  if (n == -1) return ScalarTraits<S>::from_int(0);
  if (n < 0) throw std::domain_error("pn_nu: order below -1");
  S acc = ScalarTraits<S>::from_int(0);
  std::vector<S> xp{ScalarTraits<S>::from_int(1)};
  for (int i = 1; i <= n; ++i) xp.push_back(xp.back() * x);
  S yp = ScalarTraits<S>::from_int(1);
  const BigInt nfact = factorial(static_cast<unsigned long>(n));
  for (int r = 0; 2 * r <= n; ++r) {
    const Rational w(nfact, factorial(static_cast<unsigned long>(n - 2 * r)) *
                                factorial(static_cast<unsigned long>(r)));
    acc = acc + scalar_from<S>(w) * rising_factorial(nu, n - r) *
                    xp[static_cast<size_t>(n - 2 * r)] * yp;
    yp = yp * y;
  }
  return acc;
}

template <typename S>
S pn_one_var(int n, const S& z) {
  if (n == -1) return ScalarTraits<S>::from_int(0);
  if (n < 0) throw std::domain_error("pn_one_var: order below -1");
  S acc = ScalarTraits<S>::from_int(0);
  std::vector<S> zp{ScalarTraits<S>::from_int(1)};
  for (int i = 1; i <= n; ++i) zp.push_back(zp.back() * z);
  for (int r = 0; 2 * r <= n; ++r) {
    BigInt c = pn_coeff(n, r);
    if (r % 2 == 1) c = -c;
    acc = acc + scalar_from<S>(c) * zp[static_cast<size_t>(n - 2 * r)];
  }
  return acc;
}

/// P_n(z) as an exact polynomial.
Poly pn_one_var_poly(int n);

/// P_n(2x, -1) as an exact polynomial in x.
Poly pn_2x_m1_poly(int n);

/// Chebyshev U_n by the standard recurrence U_{n+1} = 2x U_n - U_{n-1}.
template <typename S>
S chebyshev_u(int n, const S& x) {
  if (n < 0) throw std::domain_error("chebyshev_u: negative order");
  S prev = ScalarTraits<S>::from_int(1);
  if (n == 0) return prev;
  S two_x = ScalarTraits<S>::from_int(2) * x;
  S cur = two_x;
  for (int k = 2; k <= n; ++k) {
    S next = two_x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Poly chebyshev_u_poly(int n);

/// One failed comparison in a generating-function or identity sweep.
struct GfMismatch {
  int order = 0;
  std::string detail;
};

struct GfReport {
  int orders_checked = 0;
  std::vector<GfMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Expands 1/(1 - t z + t^2) exactly and checks that n! times the t^n
/// coefficient equals P_n(z), for every n <= n_max.
GfReport pn_gf_check(int n_max);

}  // namespace derivkit

#endif  // DERIVKIT_AUX_POLYS_HPP
