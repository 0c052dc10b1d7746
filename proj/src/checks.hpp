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

#ifndef DERIVKIT_CHECKS_HPP
#define DERIVKIT_CHECKS_HPP

#include <optional>
#include <string>
#include <vector>

namespace derivkit {

struct CheckFailure {
  std::string identifier;
  std::string expected;
  std::string got;
  std::string context;
};

struct CheckReport {
  std::string suite;
  int cases_run = 0;
  std::vector<CheckFailure> failures;
  double elapsed_seconds = 0.0;
  bool ok() const { return failures.empty(); }
};

// Identity suites. n_max <= 0 selects the per-suite default listed below;
// tol <= 0 selects 1e-9. The exact suites ignore tol entirely.

/// Generating functions of Pi, Q, Lambda (j<=4), Delta (j<=4) and the
/// one-variable P_n, coefficient by coefficient in rational arithmetic.
/// Default order 20.
CheckReport check_gf(int n_max = 0);

/// P_n(2x,-1)/n! == U_n(x) as exact polynomial equality. Default n 50.
CheckReport check_chebyshev(int n_max = 0);

/// Touchard row sums: T_n(1) == Bell number B_n, and triangle row sums
/// likewise. Default n 20.
CheckReport check_bell(int n_max = 0);

/// Stirling explicit sum == triangle recurrence (default n 25), and the
/// Euler-operator identity (x d/dx)^n x^p = p^n x^p for p <= 6, n <= 15,
/// verified exactly at p+1 rational points per (p, n).
CheckReport check_operator(int n_max = 0);

/// Closed-form evaluators against the jet oracle on pole-avoiding grids,
/// default m <= 12, tol 1e-9.
CheckReport check_oracle(int m_max = 0, double tol = 0.0);

/// Route agreement for tan (closed/leibniz/dp/oracle) and sec
/// (closed/dp/hoppe/oracle) plus imaginary-residual bounds, default m <= 12,
/// tol 1e-9.
CheckReport check_routes(int m_max = 0, double tol = 0.0);

const std::vector<std::string>& check_suite_names();

/// Dispatch by suite name; std::nullopt for an unknown suite.
std::optional<CheckReport> run_check_suite(const std::string& suite, int n_max = 0,
                                           double tol = 0.0);

/// Human-readable rendering: one header line plus one line per failure.
std::string render_report(const CheckReport& report);

/// Evenly spaced closed grid, the workhorse of the float suites.
std::vector<double> linear_grid(double lo, double hi, int points);

/// |a-b| relative to max(|a|,|b|); 0 when both vanish.
double relative_error(double a, double b);

}  // namespace derivkit

#endif  // DERIVKIT_CHECKS_HPP
