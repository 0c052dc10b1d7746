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

#include "tables.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "aux_polys.hpp"
#include "combinatorics.hpp"
#include "derivative_polys.hpp"

namespace derivkit {

namespace {

using nlohmann::json;

struct TableRow {
  int n = 0;
  std::string part;  // empty except for the delta family ("a" / "s")
  std::vector<Rational> coefficients;
};

struct Table {
  bool has_part_column = false;
  std::vector<TableRow> rows;
};

std::vector<Rational> pnnu_row(int n, const Rational& nu) {
  // n! rf(nu, n-r) / ((n-2r)! r!) for r = 0..floor(n/2)
  std::vector<Rational> out;
  const BigInt nfact = factorial(static_cast<unsigned long>(n));
  for (int r = 0; 2 * r <= n; ++r) {
    Rational w(nfact, factorial(static_cast<unsigned long>(n - 2 * r)) *
                          factorial(static_cast<unsigned long>(r)));
    out.push_back(w * rising_factorial(nu, n - r));
  }
  return out;
}

std::vector<Rational> bigint_row(std::vector<BigInt> src) {
  std::vector<Rational> out;
  out.reserve(src.size());
  for (auto& v : src) out.emplace_back(v);
  return out;
}

Table build_table(TableFamily family, const TableOptions& options) {
  if (options.n_max < 0) throw std::invalid_argument("table: n_max must be >= 0");
  const bool needs_j = family == TableFamily::lambda || family == TableFamily::delta;
  if (needs_j && !options.j)
    throw std::invalid_argument("table: family requires --j");
  if (family == TableFamily::pnnu && !options.nu)
    throw std::invalid_argument("table: family pnnu requires --nu");
  if (options.j && *options.j < 0) throw std::invalid_argument("table: j must be >= 0");

  Table t;
  for (int n = 0; n <= options.n_max; ++n) {
    switch (family) {
      case TableFamily::stirling2:
        t.rows.push_back({n, "", bigint_row(stirling2_row(static_cast<unsigned>(n)))});
        break;
      case TableFamily::touchard:
        t.rows.push_back({n, "", touchard(static_cast<unsigned>(n)).coeffs()});
        break;
      case TableFamily::pnxy: {
        std::vector<Rational> row;
        for (int r = 0; 2 * r <= n; ++r) row.emplace_back(pn_coeff(n, r));
        t.rows.push_back({n, "", std::move(row)});
        break;
      }
      case TableFamily::hermite: {
        std::vector<Rational> row;
        for (int r = 0; 2 * r <= n; ++r) row.emplace_back(hermite2_coeff(n, r));
        t.rows.push_back({n, "", std::move(row)});
        break;
      }
      case TableFamily::pnnu:
        t.rows.push_back({n, "", pnnu_row(n, *options.nu)});
        break;
      case TableFamily::chebyshev:
        t.rows.push_back({n, "", chebyshev_u_poly(n).coeffs()});
        break;
      case TableFamily::pi:
        t.rows.push_back({n, "", pi_poly(n).coeffs()});
        break;
      case TableFamily::q:
        t.rows.push_back({n, "", q_poly(n).coeffs()});
        break;
      case TableFamily::lambda:
        t.rows.push_back({n, "", lambda_carrier(n, *options.j).coeffs()});
        break;
      case TableFamily::delta: {
        t.has_part_column = true;
        const ExtElem e = delta_elem(n, *options.j);
        t.rows.push_back({n, "a", e.a().coeffs()});
        t.rows.push_back({n, "s", e.b().coeffs()});
        break;
      }
    }
  }
  return t;
}

}  // namespace

std::optional<TableFamily> table_family_from_string(const std::string& name) {
  static const std::pair<const char*, TableFamily> kMap[] = {
      {"stirling2", TableFamily::stirling2}, {"touchard", TableFamily::touchard},
      {"pnxy", TableFamily::pnxy},           {"pnnu", TableFamily::pnnu},
      {"hermite", TableFamily::hermite},     {"chebyshev", TableFamily::chebyshev},
      {"pi", TableFamily::pi},               {"q", TableFamily::q},
      {"lambda", TableFamily::lambda},       {"delta", TableFamily::delta},
  };
  for (const auto& [n, f] : kMap)
    if (name == n) return f;
  return std::nullopt;
}

const char* table_family_name(TableFamily family) {
  switch (family) {
    case TableFamily::stirling2: return "stirling2";
    case TableFamily::touchard: return "touchard";
    case TableFamily::pnxy: return "pnxy";
    case TableFamily::pnnu: return "pnnu";
    case TableFamily::hermite: return "hermite";
    case TableFamily::chebyshev: return "chebyshev";
    case TableFamily::pi: return "pi";
    case TableFamily::q: return "q";
    case TableFamily::lambda: return "lambda";
    case TableFamily::delta: return "delta";
  }
  return "?";
}

std::string render_table_csv(TableFamily family, const TableOptions& options) {
  const Table t = build_table(family, options);
  size_t width = 1;
  for (const auto& row : t.rows) width = std::max(width, row.coefficients.size());

  std::ostringstream os;
  os << "n";
  if (t.has_part_column) os << ",part";
  for (size_t i = 0; i < width; ++i) os << ",c" << i;
  os << "\n";
  for (const auto& row : t.rows) {
    os << row.n;
    if (t.has_part_column) os << "," << row.part;
    for (size_t i = 0; i < width; ++i) {
      os << ",";
      if (i < row.coefficients.size()) os << row.coefficients[i].str();
    }
    os << "\n";
  }
  return os.str();
}

std::string render_table_json(TableFamily family, const TableOptions& options) {
  const Table t = build_table(family, options);

  auto coeff_array = [](const std::vector<Rational>& coeffs) {
    json arr = json::array();
    for (const auto& c : coeffs)
      arr.push_back({c.numerator().get_str(), c.denominator().get_str()});
    return arr;
  };

  json doc;
  doc["family"] = table_family_name(family);
  doc["n_max"] = options.n_max;
  if (options.j) doc["j"] = *options.j;
  if (options.nu) doc["nu"] = options.nu->str();
  doc["entries"] = json::array();
  if (t.has_part_column) {
    for (size_t i = 0; i + 1 < t.rows.size(); i += 2) {
      json entry;
      entry["n"] = t.rows[i].n;
      entry["a"] = coeff_array(t.rows[i].coefficients);
      entry["b"] = coeff_array(t.rows[i + 1].coefficients);
      doc["entries"].push_back(std::move(entry));
    }
  } else {
    for (const auto& row : t.rows) {
      json entry;
      entry["n"] = row.n;
      entry["coefficients"] = coeff_array(row.coefficients);
      doc["entries"].push_back(std::move(entry));
    }
  }
  return doc.dump(2) + "\n";
}

}  // namespace derivkit
