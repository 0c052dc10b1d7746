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

#include "deriv_engine.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "combinatorics.hpp"
#include "float128.hpp"

namespace derivkit {

namespace {

using LD = long double;
using F128 = __float128;
using CLD = std::complex<LD>;

constexpr LD kHalfPi = std::numbers::pi_v<LD> / 2.0L;

LD stirling2_ld(unsigned m, unsigned r) { return to_long_double(stirling2(m, r)); }

F128 stirling2_q(unsigned m, unsigned r) { return to_float128(stirling2(m, r)); }

LD binomial_ld(unsigned n, unsigned k) { return to_long_double(binomial(n, k)); }

CLD unit_ipow(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0:
      return {1.0L, 0.0L};
    case 1:
      return {0.0L, 1.0L};
    case 2:
      return {-1.0L, 0.0L};
    default:
      return {0.0L, -1.0L};
  }
}

// sin(x + k pi/2) and cos(x + k pi/2) by quadrant selection, never by adding
// floating multiples of pi/2.
LD sin_shift(LD x, int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return std::sin(x);
    case 1:
      return std::cos(x);
    case 2:
      return -std::sin(x);
    default:
      return -std::cos(x);
  }
}

LD cos_shift(LD x, int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return std::cos(x);
    case 1:
      return -std::sin(x);
    case 2:
      return -std::cos(x);
    default:
      return std::sin(x);
  }
}

struct ComplexEval {
  LD value;
  LD residual;
};

void check_residual(const char* where, LD re, LD im) {
  if (std::fabs(im) > static_cast<LD>(kResidualImTol) * std::max(1.0L, std::fabs(re)))
    throw ConsistencyError(std::string(where) + ": imaginary residual exceeds tolerance");
}

// sec(x) * sum_r S2(m,r) xi^{r-1} (xi P_r + r P_{r-1}), xi = e^{ix}.
// d^m sec is i^m times this; the tan remark reuses the P_r-only part.
ComplexEval sec_stirling_ld(int m, LD x) {
  const LD c = std::cos(x);
  if (std::fabs(c) < static_cast<LD>(kSingularTol))
    throw SingularityError("deriv_sec: cos(x) within singular tolerance");
  const LD secv = 1.0L / c;
  const CLD xi(std::cos(x), std::sin(x));
  const CLD px(-secv, 0.0L);
  const CLD py = CLD(-secv, 0.0L) / (CLD(2.0L, 0.0L) * xi);

  CLD sum(0.0L, 0.0L);
  CLD xi_pow = CLD(1.0L, 0.0L) / xi;  // xi^{r-1} at r = 0
  CLD p_prev(0.0L, 0.0L);             // P_{-1} = 0
  for (int r = 0; r <= m; ++r) {
    const CLD p_r = pn(r, px, py);
    sum += stirling2_ld(static_cast<unsigned>(m), static_cast<unsigned>(r)) * xi_pow *
           (xi * p_r + static_cast<LD>(r) * p_prev);
    p_prev = p_r;
    xi_pow *= xi;
  }
  const CLD val = unit_ipow(m) * (secv * sum);
  check_residual("deriv_sec", val.real(), val.imag());
  return {val.real(), val.imag()};
}

ComplexEval tan_direct_ld(int m, LD x) {
  const LD c = std::cos(x);
  if (std::fabs(c) < static_cast<LD>(kSingularTol))
    throw SingularityError("deriv_tan: cos(x) within singular tolerance");
  const LD secv = 1.0L / c;
  const CLD xi(std::cos(x), std::sin(x));
  const CLD px(-secv, 0.0L);
  const CLD py = CLD(-secv, 0.0L) / (CLD(2.0L, 0.0L) * xi);

  CLD sum(0.0L, 0.0L);
  CLD xi_pow = CLD(1.0L, 0.0L) / xi;
  for (int r = 0; r <= m; ++r) {
    sum += stirling2_ld(static_cast<unsigned>(m), static_cast<unsigned>(r)) * xi_pow *
           pn(r, px, py);
    xi_pow *= xi;
  }
  const LD delta_m0 = (m == 0) ? 1.0L : 0.0L;
  const CLD val = unit_ipow(m + 1) * (secv * sum - CLD(delta_m0, 0.0L));
  check_residual("deriv_tan_direct", val.real(), val.imag());
  return {val.real(), val.imag()};
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::closed:
      return "closed";
    case Method::dp:
      return "dp";
    case Method::oracle:
      return "oracle";
    case Method::hoppe:
      return "hoppe";
    case Method::leibniz:
      return "leibniz";
    case Method::lambda:
      return "lambda";
    case Method::delta:
      return "delta";
  }
  return "?";
}

double deriv_arctan(int n, double x) {
  if (n < 0) throw std::domain_error("deriv_arctan: negative order");
  if (n == 0) return std::atan(x);
  return static_cast<double>(deriv_lorentz<LD>(n - 1, static_cast<LD>(x)));
}

Rational deriv_arctan_exact(int n, const Rational& x) {
  if (n < 1)
    throw std::domain_error("deriv_arctan_exact: order must be >= 1 (arctan itself is not rational)");
  return deriv_lorentz<Rational>(n - 1, x);
}

double deriv_lorentz_pow(int n, double nu, double x) {
  if (n < 0) throw std::domain_error("deriv_lorentz_pow: negative order");
  const LD lx = static_cast<LD>(x);
  const LD lnu = static_cast<LD>(nu);
  const LD w = 1.0L + lx * lx;
  const LD winv = 1.0L / w;
  const LD val = std::pow(w, -lnu) *
                 pn_nu<LD>(n, lnu, -2.0L * lx * winv, -winv);
  return static_cast<double>(val);
}

double deriv_arccos(int n, double x) {
  if (n < 1) throw std::domain_error("deriv_arccos: order must be >= 1");
  if (std::fabs(x) >= 1.0)
    throw std::domain_error("deriv_arccos: needs |x| < 1");
  const LD lx = static_cast<LD>(x);
  const LD w = 1.0L - lx * lx;
  const LD winv = 1.0L / w;
  const LD val = -1.0L / std::sqrt(w) *
                 pn_nu<LD>(n - 1, 0.5L, 2.0L * lx * winv, winv);
  return static_cast<double>(val);
}

// The sech-family sums cancel exponentially hard: at order m the largest
// terms scale like S2(m,k) (e^x sech x)^k k! while the result scales like
// the m-th derivative of 2 e^{-x}, so ~10 decimal digits are gone by
// m = 12, x ~ 2. Quad precision keeps the published tolerances comfortable.
double deriv_sech(int m, double x) {
  if (m < 0) throw std::domain_error("deriv_sech: negative order");
  const F128 qx = static_cast<F128>(x);
  const F128 sechv = 1 / coshq(qx);
  const F128 ex = expq(qx);
  const F128 px = -sechv;
  const F128 py = -sechv / (2 * ex);

  F128 sum = 0;
  F128 e_pow = 1 / ex;  // e^{(k-1)x} at k = 0
  F128 p_prev = 0;      // P_{-1} = 0
  for (int k = 0; k <= m; ++k) {
    const F128 p_k = pn(k, px, py);
    sum += stirling2_q(static_cast<unsigned>(m), static_cast<unsigned>(k)) * e_pow *
           (ex * p_k + static_cast<F128>(k) * p_prev);
    p_prev = p_k;
    e_pow *= ex;
  }
  return static_cast<double>(sechv * sum);
}

double deriv_sech_pow(int m, double nu, double x) {
  if (m < 0) throw std::domain_error("deriv_sech_pow: negative order");
  if (detail::is_nonpositive_integer(nu))
    throw std::domain_error("deriv_sech_pow: nu must not be a non-positive integer");
  const F128 qx = static_cast<F128>(x);
  const F128 qnu = static_cast<F128>(nu);
  const F128 sechv = 1 / coshq(qx);
  const F128 ex = expq(qx);
  const F128 px = -sechv;
  const F128 py = -sechv / (2 * ex);

  // sech^nu sum_r S2(m,r) sum_s C(r,s) ff(nu, r-s) e^{xs} P_s^nu(px, py):
  // the printed e^{xr} e^{-x(r-s)} factors combined into e^{xs}.
  F128 outer = 0;
  for (int r = 0; r <= m; ++r) {
    F128 inner = 0;
    for (int s = 0; s <= r; ++s) {
      F128 ff = 1;
      for (int i = 0; i < r - s; ++i) ff *= (qnu - static_cast<F128>(i));
      if (ff == 0) continue;
      inner += to_float128(binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(s))) *
               ff * expq(qx * static_cast<F128>(s)) * pn_nu<F128>(s, qnu, px, py);
    }
    outer += stirling2_q(static_cast<unsigned>(m), static_cast<unsigned>(r)) * inner;
  }
  return static_cast<double>(powq(sechv, qnu) * outer);
}

DerivResult deriv_sec(int m, double x) {
  if (m < 0) throw std::domain_error("deriv_sec: negative order");
  const ComplexEval e = sec_stirling_ld(m, static_cast<LD>(x));
  return {static_cast<double>(e.value), Method::closed, static_cast<double>(e.residual)};
}

DerivResult deriv_tan_direct(int m, double x) {
  if (m < 0) throw std::domain_error("deriv_tan_direct: negative order");
  const ComplexEval e = tan_direct_ld(m, static_cast<LD>(x));
  return {static_cast<double>(e.value), Method::closed, static_cast<double>(e.residual)};
}

DerivResult deriv_tan_leibniz(int m, double x) {
  if (m < 0) throw std::domain_error("deriv_tan_leibniz: negative order");
  const LD lx = static_cast<LD>(x);
  if (std::fabs(std::cos(lx)) < static_cast<LD>(kSingularTol))
    throw SingularityError("deriv_tan_leibniz: cos(x) within singular tolerance");
  LD acc = 0.0L;
  LD resid = 0.0L;
  for (int s = 0; s <= m; ++s) {
    const ComplexEval ds = sec_stirling_ld(s, lx);
    const LD w = binomial_ld(static_cast<unsigned>(m), static_cast<unsigned>(s)) *
                 sin_shift(lx, m - s);
    acc += w * ds.value;
    resid = std::max(resid, std::fabs(ds.residual));
  }
  return {static_cast<double>(acc), Method::leibniz, static_cast<double>(resid)};
}

DerivResult deriv_cot(int m, double x) {
  if (m < 0) throw std::domain_error("deriv_cot: negative order");
  const LD lx = static_cast<LD>(x);
  if (std::fabs(std::sin(lx)) < static_cast<LD>(kSingularTol))
    throw SingularityError("deriv_cot: sin(x) within singular tolerance");
  const LD shifted = lx - kHalfPi;  // sec(x - pi/2) = csc(x)
  LD acc = 0.0L;
  LD resid = 0.0L;
  for (int s = 0; s <= m; ++s) {
    const ComplexEval ds = sec_stirling_ld(s, shifted);
    const LD w = binomial_ld(static_cast<unsigned>(m), static_cast<unsigned>(s)) *
                 cos_shift(lx, m - s);
    acc += w * ds.value;
    resid = std::max(resid, std::fabs(ds.residual));
  }
  return {static_cast<double>(acc), Method::closed, static_cast<double>(resid)};
}

}  // namespace derivkit
