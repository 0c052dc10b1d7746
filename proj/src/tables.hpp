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

#ifndef DERIVKIT_TABLES_HPP
#define DERIVKIT_TABLES_HPP

#include <optional>
#include <string>

#include "rational.hpp"

namespace derivkit {

// Coefficient-table rendering for the CLI. Families:
//   stirling2   S2(n,k), k = 0..n
//   touchard    Touchard polynomial coefficients (the same triangle)
//   pnxy        P_n(x,y) term weights over r (x^{n-2r} y^r)
//   pnnu        P_n^nu term weights over r; requires nu
//   hermite     H_n(x,y) term weights over r
//   chebyshev   U_n coefficients in x
//   pi, q       derivative-polynomial coefficients in xi
//   lambda      Lambda carrier coefficients in xi; requires j
//   delta       Delta_(m,j) ring element, one "a" and one "s" part per order;
//               requires j
//
// CSV is padded to a rectangular header (empty cells past a row's degree);
// exact values print as "p" or "p/q". JSON carries numerator/denominator
// pairs as decimal strings so arbitrary precision survives the trip.

enum class TableFamily {
  stirling2,
  touchard,
  pnxy,
  pnnu,
  hermite,
  chebyshev,
  pi,
  q,
  lambda,
  delta,
};

std::optional<TableFamily> table_family_from_string(const std::string& name);
const char* table_family_name(TableFamily family);

struct TableOptions {
  int n_max = 0;
  std::optional<int> j;
  std::optional<Rational> nu;
};

/// Throws std::invalid_argument when a family-required parameter is missing
/// (j for lambda/delta, nu for pnnu) or n_max is negative.
std::string render_table_csv(TableFamily family, const TableOptions& options);
std::string render_table_json(TableFamily family, const TableOptions& options);

}  // namespace derivkit

#endif  // DERIVKIT_TABLES_HPP
