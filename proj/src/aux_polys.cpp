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

#include "aux_polys.hpp"

#include <cmath>
#include <sstream>

#include "series.hpp"

namespace derivkit {

BigInt hermite2_coeff(int n, int r) {
  if (n < 0 || r < 0 || 2 * r > n) return 0;
  return factorial(static_cast<unsigned long>(n)) /
         (factorial(static_cast<unsigned long>(n - 2 * r)) *
          factorial(static_cast<unsigned long>(r)));
}

BigInt pn_coeff(int n, int r) {
  if (n < 0 || r < 0 || 2 * r > n) return 0;
  return factorial(static_cast<unsigned long>(n)) *
         factorial(static_cast<unsigned long>(n - r)) /
         (factorial(static_cast<unsigned long>(n - 2 * r)) *
          factorial(static_cast<unsigned long>(r)));
}

namespace detail {

bool is_nonpositive_integer(const Rational& v) {
  return v.is_integer() && v.sign() <= 0;
}

bool is_nonpositive_integer(double v) {
  return v <= 0.0 && v == std::floor(v);
}

bool is_nonpositive_integer(long double v) {
  return v <= 0.0L && v == std::floor(v);
}

}  // namespace detail

Poly pn_one_var_poly(int n) { return pn_one_var(n, Poly::variable()); }

Poly pn_2x_m1_poly(int n) {
  const Poly two_x({Rational(0), Rational(2)});
  return pn(n, two_x, Poly(Rational(-1)));
}

Poly chebyshev_u_poly(int n) { return chebyshev_u(n, Poly::variable()); }

GfReport pn_gf_check(int n_max) {
  GfReport report;
  if (n_max < 0) return report;
  // 1/(1 - t z + t^2) as a series in t over polynomials in z.
  SeriesInT<Poly> den(n_max, Poly());
  den.set_coeff(0, Poly::one());
  if (n_max >= 1) den.set_coeff(1, -Poly::variable());
  if (n_max >= 2) den.set_coeff(2, Poly::one());
  const SeriesInT<Poly> gf = den.recip_unit(Poly::one());

  BigInt nfact(1);
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) nfact *= n;
    const Poly got = Rational(nfact) * gf.coeff(n);
    const Poly want = pn_one_var_poly(n);
    if (got != want) {
      std::ostringstream os;
      os << "coefficient " << n << ": gf gives " << got.str("z") << ", explicit sum gives "
         << want.str("z");
      report.mismatches.push_back({n, os.str()});
    }
    ++report.orders_checked;
  }
  return report;
}

}  // namespace derivkit
