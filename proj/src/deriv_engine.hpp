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

#ifndef DERIVKIT_DERIV_ENGINE_HPP
#define DERIVKIT_DERIV_ENGINE_HPP

#include "aux_polys.hpp"
#include "errors.hpp"
#include "fn_id.hpp"
#include "scalar.hpp"

namespace derivkit {

// Closed-form m-th derivative evaluators.
//
// The inverse-function and Lorentzian family rests on
//   d^n/dx^n [1/(1+x^2)]  = K_n(x)      = P_n(-2x/(1+x^2), -1/(1+x^2)) / (1+x^2)
//   d^n/dx^n [(1+x^2)^-nu] = K_n^nu(x)  = P_n^nu(same args) / (1+x^2)^nu
// and the circular/hyperbolic family on the substitution xi = e^x (real) or
// xi = e^{ix} (sec/tan), which turns d/dx into the Euler operator xi d/dxi
// and lets the Stirling expansion sum_{r} S2(m,r) xi^r d^r/dxi^r finish the
// job. Floating work runs in the widest native float (long double), with
// results narrowed to double at the boundary.

enum class Method {
  closed,   // the Stirling / auxiliary-polynomial closed form
  dp,       // derivative polynomials Pi_n / Q_n at tan x
  oracle,   // truncated-Taylor-jet ground truth
  hoppe,    // composite-function expansion (sec only)
  leibniz,  // product-rule composition over d^s sec
  lambda,   // cos^j via Lambda_{m,j}(tan x)
  delta,    // cos^j via Delta_{m,j}(cos x)
};

const char* method_name(Method m);

struct DerivResult {
  double value = 0.0;
  Method method = Method::closed;
  // Imaginary part discarded by a complex-intermediate route; identically
  // zero for the real-arithmetic evaluators.
  double residual_im = 0.0;
};

/// K_n(x): n-th derivative of the Lorentzian 1/(1+x^2). Exact over Rational.
template <typename S>
S deriv_lorentz(int n, const S& x) {
  const S one = ScalarTraits<S>::from_int(1);
  const S winv = scalar_inverse(one + x * x);
  const S px = ScalarTraits<S>::from_int(-2) * x * winv;
  const S py = ScalarTraits<S>::from_int(0) - winv;
  return winv * pn(n, px, py);
}

/// n-th derivative of arctan for n >= 1 (equals K_{n-1}). n == 0 returns the
/// function value from host math as a convenience; it is not oracle-grade.
double deriv_arctan(int n, double x);

/// Exact-rational arctan derivative; n == 0 is rejected here.
Rational deriv_arctan_exact(int n, const Rational& x);

/// n-th derivative of (1+x^2)^(-nu); nu must not be a non-positive integer.
double deriv_lorentz_pow(int n, double nu, double x);

/// n-th derivative of arccos on |x| < 1, n >= 1.
double deriv_arccos(int n, double x);

/// m-th derivative of sech.
double deriv_sech(int m, double x);

/// m-th derivative of sech^nu.
double deriv_sech_pow(int m, double nu, double x);

/// m-th derivative of sec via the complex Stirling route (xi = e^{ix}).
DerivResult deriv_sec(int m, double x);

/// m-th derivative of tan without the Leibniz rule, from
/// tan x = i (2/(1+xi^2) - 1), xi = e^{ix}.
DerivResult deriv_tan_direct(int m, double x);

/// m-th derivative of tan by the product rule over sin * sec:
/// sum_s C(m,s) sin(x + (m-s) pi/2) d^s sec(x).
DerivResult deriv_tan_leibniz(int m, double x);

/// m-th derivative of cot via cos * csc, with csc x = sec(x - pi/2):
/// sum_s C(m,s) cos(x + (m-s) pi/2) (d^s sec)(x - pi/2).
DerivResult deriv_cot(int m, double x);

}  // namespace derivkit

#endif  // DERIVKIT_DERIV_ENGINE_HPP
