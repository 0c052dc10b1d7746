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

#ifndef DERIVKIT_COMBINATORICS_HPP
#define DERIVKIT_COMBINATORICS_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "poly.hpp"
#include "scalar.hpp"

namespace derivkit {

/// Stirling number of the second kind S2(n,k): the number of partitions of
/// an n-set into k nonempty blocks.
///
/// Computed by the triangle recurrence S2(n,k) = k*S2(n-1,k) + S2(n-1,k-1)
/// over a process-wide memoized table (internally synchronized, grows
/// monotonically). k > n yields 0, which keeps summation loops total.
const BigInt& stirling2(unsigned n, unsigned k);

/// Same number from the explicit alternating sum
///   S2(l,m) = (1/m!) * sum_{j=0..m} (-1)^(m-j) C(m,j) j^l.
/// Slower; kept as the independent cross-check of the recurrence.
BigInt stirling2_sum(unsigned l, unsigned m);

/// Row n of the Stirling triangle, k = 0..n.
std::vector<BigInt> stirling2_row(unsigned n);

/// Touchard polynomial T_n(x) = sum_k S2(n,k) x^k.
Poly touchard(unsigned n);

/// Bell numbers B_0..B_n via B_{m+1} = sum_k C(m,k) B_k.
std::vector<BigInt> bell_numbers(unsigned n);

/// Expansion of the Euler operator power (x d/dx)^m applied to f, read off
/// at the point xi:
///
///   sum_{r=0..m} S2(m,r) xi^r f^{(r)}(xi)
///
/// derivs[r] must hold the r-th derivative of f at xi (length m+1).
template <typename S>
S xd_expand_apply(unsigned m, std::span<const S> derivs, const S& xi) {
  if (derivs.size() != static_cast<size_t>(m) + 1)
    throw std::domain_error("xd_expand_apply: need exactly m+1 derivative values");
  S acc = ScalarTraits<S>::from_int(0);
  S xi_pow = ScalarTraits<S>::from_int(1);
  for (unsigned r = 0; r <= m; ++r) {
    acc = acc + scalar_from<S>(stirling2(m, r)) * xi_pow * derivs[r];
    xi_pow = xi_pow * xi;
  }
  return acc;
}

template <typename S>
S xd_expand_apply(unsigned m, const std::vector<S>& derivs, const S& xi) {
  return xd_expand_apply<S>(m, std::span<const S>(derivs), xi);
}

}  // namespace derivkit

#endif  // DERIVKIT_COMBINATORICS_HPP
