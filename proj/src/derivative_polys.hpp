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

#ifndef DERIVKIT_DERIVATIVE_POLYS_HPP
#define DERIVKIT_DERIVATIVE_POLYS_HPP

#include "aux_polys.hpp"
#include "ext_ring.hpp"
#include "poly.hpp"

namespace derivkit {

// Derivative-polynomial families generated by repeated application of
// first-order operators (Rodrigues-style definitions):
//
//   Pi_n    = [(1+xi^2) d/dxi]^n xi            d^n tan x   = Pi_n(tan x)
//   Q_n     : [(1+xi^2) d/dxi]^n sqrt(1+xi^2)  = Q_n(xi) sqrt(1+xi^2),
//             so d^n sec x = sec x * Q_n(tan x)
//   Lambda_{m,j} = [(1+xi^2) d/dxi]^m (1+xi^2)^{-j/2}
//                = lambda_{m,j}(xi) * (1+xi^2)^{-j/2}   (carrier polynomial)
//   Delta_{m,j}  = (-sqrt(1-xi^2) d/dxi)^m xi^j, kept in the s^2 = 1-xi^2 ring
//
// All four close into polynomial recurrences (or exact ring elements), so
// every family below is computed in exact rational arithmetic and cached.

/// Pi_n: Pi_0 = xi, Pi_{k+1} = (1+xi^2) Pi_k'.
Poly pi_poly(int n);

/// Q_n carrier: q_0 = 1, q_{k+1} = (1+xi^2) q_k' + xi q_k, obtained by
/// closing the operator on p(xi) sqrt(1+xi^2).
Poly q_poly(int n);

/// Lambda_{m,j} carrier: lambda_0 = 1,
/// lambda_{k+1} = (1+xi^2) lambda_k' - j xi lambda_k; the (1+xi^2)^{-j/2}
/// factor is an exponent tag reattached only at evaluation time.
Poly lambda_carrier(int m, int j);

/// Delta_{m,j} as an element of the s^2 = 1 - xi^2 ring.
ExtElem delta_elem(int m, int j);

// ---- numeric evaluation routes -------------------------------------------

/// d^m tan x = Pi_m(tan x). Real arithmetic only.
double dp_tan(int m, double x);

/// d^m sec x = sec x * Q_m(tan x). Real arithmetic only.
double dp_sec(int m, double x);

/// d^m cos^j x = lambda_{m,j}(tan x) * cos^j x; valid where cos x > 0
/// (the carrier identity lives on the principal branch). No sign prefactor:
/// the change of variables xi = tan x gives d/dx = (1+xi^2) d/dxi directly.
double lambda_cos_pow_deriv(int m, int j, double x);

/// d^m cos^j x = Delta_{m,j} evaluated at xi = cos x, s = sin x; valid for
/// all x since s = sin x satisfies s^2 = 1 - xi^2 with either sign. No
/// (-1)^m prefactor: the operator -sqrt(1-xi^2) d/dxi IS d/dx under
/// xi = cos x.
double delta_cos_pow_deriv(int m, int j, double x);

/// Hoppe composite-derivative coefficient for g = cos:
/// A_{m,k}(x) = sum_j C(k,j) (-1)^{k-j} cos^{k-j}(x) d^m(cos^j x).
double hoppe_a(int m, int k, double x);

/// d^m sec x by the Hoppe expansion of f(g) with f = 1/., g = cos:
/// sum_k sec^{k+1}(x) sum_j C(k,j) (-1)^j cos^{k-j}(x) d^m(cos^j x),
/// the inner derivatives supplied by the Delta route.
double hoppe_sec(int m, double x);

// ---- generating-function verification (exact) ----------------------------

/// sum t^n/n! Pi_n(xi) == (xi + tan t)/(1 - xi tan t), coefficient by
/// coefficient against the exact rational tan series, n <= n_max.
GfReport gf_check_pi(int n_max);

/// sum t^n/n! Q_n(xi) == sec(t)/(1 - xi tan t).
GfReport gf_check_q(int n_max);

/// Carrier form of sum t^m/m! Lambda_{m,j}(xi) ==
/// (1 - xi tan t)^j [(1+xi^2)(1+tan^2 t)]^{-j/2}: after stripping the
/// (1+xi^2)^{-j/2} tag the right side is (1 - xi tan t)^j cos^j t.
GfReport gf_check_lambda(int m_max, int j);

/// sum t^m/m! Delta_{m,j}(xi) == (xi cos t - s sin t)^j, expanded in the
/// s^2 = 1 - xi^2 ring.
GfReport gf_check_delta(int m_max, int j);

// ---- Lie flow -------------------------------------------------------------

/// Which f the flow identity e^{t (1+xi^2) d/dxi} f(xi) = f(flow(xi,t)) is
/// instantiated with; both have exact symbolic expansions available.
enum class FlowFn { identity, sqrt_one_plus_sq };

struct LieFlowReport {
  bool converged = false;  // false: truncated series still moving, not a failure
  double series_value = 0.0;
  double closed_value = 0.0;
  double abs_error = 0.0;
  double last_term = 0.0;
};

/// Sums sum_{n<=terms} t^n/n! [(1+xi^2) d/dxi]^n f numerically and compares
/// with f((xi cos t + sin t)/(cos t - xi sin t)).
LieFlowReport lie_flow_check(double t, double xi, FlowFn f, int terms = 25);

}  // namespace derivkit

#endif  // DERIVKIT_DERIVATIVE_POLYS_HPP
