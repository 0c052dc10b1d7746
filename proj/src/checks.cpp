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

#include "checks.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "combinatorics.hpp"
#include "deriv_engine.hpp"
#include "derivative_polys.hpp"
#include "evaluator.hpp"
#include "jet.hpp"

namespace derivkit {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void add_gf_failures(CheckReport& report, const GfReport& gf, const std::string& family) {
  report.cases_run += gf.orders_checked;
  for (const auto& m : gf.mismatches)
    report.failures.push_back({family + "[" + std::to_string(m.order) + "]",
                               "exact generating-function coefficient", "mismatch", m.detail});
}

void compare_case(CheckReport& report, const std::string& id, double expected, double got,
                  double tol, const std::string& context) {
  ++report.cases_run;
  const double rel = relative_error(expected, got);
  if (!(rel <= tol) || !std::isfinite(got))
    report.failures.push_back(
        {id, fmt(expected), fmt(got), context + " (rel err " + fmt(rel) + ")"});
}

constexpr int kGridPoints = 20;

}  // namespace

std::vector<double> linear_grid(double lo, double hi, int points) {
  std::vector<double> g;
  g.reserve(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i)
    g.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1));
  return g;
}

double relative_error(double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  if (scale == 0.0) return 0.0;
  return std::fabs(a - b) / scale;
}

CheckReport check_gf(int n_max) {
  if (n_max <= 0) n_max = 20;
  Stopwatch sw;
  CheckReport report;
  report.suite = "gf";
  add_gf_failures(report, gf_check_pi(n_max), "pi");
  add_gf_failures(report, gf_check_q(n_max), "q");
  for (int j = 0; j <= 4; ++j)
    add_gf_failures(report, gf_check_lambda(n_max, j), "lambda(j=" + std::to_string(j) + ")");
  for (int j = 0; j <= 4; ++j)
    add_gf_failures(report, gf_check_delta(n_max, j), "delta(j=" + std::to_string(j) + ")");
  add_gf_failures(report, pn_gf_check(n_max), "pn_one_var");
  report.elapsed_seconds = sw.seconds();
  return report;
}

CheckReport check_chebyshev(int n_max) {
  if (n_max <= 0) n_max = 50;
  Stopwatch sw;
  CheckReport report;
  report.suite = "chebyshev";
  BigInt nfact(1);
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) nfact *= n;
    ++report.cases_run;
    const Poly lhs = pn_2x_m1_poly(n);
    const Poly rhs = Rational(nfact) * chebyshev_u_poly(n);
    if (lhs != rhs)
      report.failures.push_back({"chebyshev[" + std::to_string(n) + "]", rhs.str("x"),
                                 lhs.str("x"), "P_n(2x,-1) vs n! U_n(x)"});
  }
  report.elapsed_seconds = sw.seconds();
  return report;
}

CheckReport check_bell(int n_max) {
  if (n_max <= 0) n_max = 20;
  Stopwatch sw;
  CheckReport report;
  report.suite = "bell";
  const auto bell = bell_numbers(static_cast<unsigned>(n_max));
  for (int n = 0; n <= n_max; ++n) {
    ++report.cases_run;
    const Rational t1 = touchard(static_cast<unsigned>(n)).eval(Rational(1));
    if (t1 != Rational(bell[static_cast<size_t>(n)]))
      report.failures.push_back({"touchard_at_one[" + std::to_string(n) + "]",
                                 bell[static_cast<size_t>(n)].get_str(), t1.str(),
                                 "T_n(1) vs Bell number"});
    ++report.cases_run;
    BigInt row_sum(0);
    for (const auto& s : stirling2_row(static_cast<unsigned>(n))) row_sum += s;
    if (row_sum != bell[static_cast<size_t>(n)])
      report.failures.push_back({"stirling_row_sum[" + std::to_string(n) + "]",
                                 bell[static_cast<size_t>(n)].get_str(), row_sum.get_str(),
                                 "triangle row sum vs Bell number"});
  }
  report.elapsed_seconds = sw.seconds();
  return report;
}

CheckReport check_operator(int n_max) {
  if (n_max <= 0) n_max = 25;
  Stopwatch sw;
  CheckReport report;
  report.suite = "operator";

  for (int n = 0; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k) {
      ++report.cases_run;
      const BigInt& rec = stirling2(static_cast<unsigned>(n), static_cast<unsigned>(k));
      const BigInt sum = stirling2_sum(static_cast<unsigned>(n), static_cast<unsigned>(k));
      if (rec != sum)
        report.failures.push_back({"stirling2[" + std::to_string(n) + "," + std::to_string(k) + "]",
                                   sum.get_str(), rec.get_str(),
                                   "alternating sum vs triangle recurrence"});
    }

  // (x d/dx)^n x^p = p^n x^p. Degree-p polynomial identity in xi, so p+1
  // distinct sample points settle it; we use a fixed list of seven.
  const std::vector<Rational> points = {Rational(2),      Rational(1, 2),  Rational(-3, 2),
                                        Rational(5, 3),   Rational(-7, 4), Rational(9, 5),
                                        Rational(-1, 5)};
  for (int p = 0; p <= 6; ++p)
    for (int n = 0; n <= 15; ++n) {
      ++report.cases_run;
      bool bad = false;
      for (size_t i = 0; i <= static_cast<size_t>(p) && !bad; ++i) {
        const Rational& xi = points[i];
        std::vector<Rational> derivs;
        for (int r = 0; r <= n; ++r) {
          // r-th derivative of xi^p: p (p-1) ... (p-r+1) xi^{p-r}
          if (r > p) {
            derivs.emplace_back(0);
            continue;
          }
          Rational ff(1);
          for (int q = 0; q < r; ++q) ff *= Rational(p - q);
          derivs.push_back(ff * rational_pow(xi, p - r));
        }
        const Rational got = xd_expand_apply<Rational>(static_cast<unsigned>(n), derivs, xi);
        const Rational want =
            rational_pow(Rational(p), n) * rational_pow(xi, p);
        if (got != want) {
          report.failures.push_back({"euler_operator[p=" + std::to_string(p) +
                                         ",n=" + std::to_string(n) + "]",
                                     want.str(), got.str(), "at xi = " + xi.str()});
          bad = true;
        }
      }
    }
  report.elapsed_seconds = sw.seconds();
  return report;
}

CheckReport check_oracle(int m_max, double tol) {
  if (m_max <= 0) m_max = 12;
  if (tol <= 0.0) tol = 1e-9;
  Stopwatch sw;
  CheckReport report;
  report.suite = "oracle";

  auto sweep = [&](const std::string& id, FnId fn, int m_lo, const std::vector<double>& grid,
                   double case_tol, FnParams params = {}) {
    for (int m = m_lo; m <= m_max; ++m)
      for (double x : grid) {
        const double want = nth_derivative(fn, m, x, params);
        const double got = evaluate(fn, Method::closed, m, x, params).value;
        compare_case(report, id + "[m=" + std::to_string(m) + ",x=" + fmt(x) + "]", want, got,
                     case_tol, "closed form vs jet oracle");
      }
  };

  const auto wide = linear_grid(-3.0, 3.0, kGridPoints);
  const auto unit = linear_grid(-0.85, 0.85, kGridPoints);
  const auto hyp = linear_grid(0.2, 2.4, kGridPoints);
  const auto cot_grid = linear_grid(0.15, 3.0, kGridPoints);

  // Radical-free closed forms get the tighter gate.
  const double strict = std::min(tol, 1e-10);
  sweep("arctan", FnId::arctan, 1, wide, strict);
  sweep("lorentz", FnId::lorentz, 0, wide, strict);
  sweep("sech", FnId::sech, 0, hyp, strict);
  sweep("lorentz_pow(nu=2)", FnId::lorentz_pow, 0, wide, strict, {.nu = 2.0, .j = 1});
  sweep("lorentz_pow(nu=0.5)", FnId::lorentz_pow, 0, wide, tol, {.nu = 0.5, .j = 1});
  sweep("lorentz_pow(nu=-0.5)", FnId::lorentz_pow, 0, wide, tol, {.nu = -0.5, .j = 1});
  sweep("arccos", FnId::arccos, 1, unit, tol);
  sweep("sech_pow(nu=1)", FnId::sech_pow, 0, hyp, strict, {.nu = 1.0, .j = 1});
  sweep("sech_pow(nu=2)", FnId::sech_pow, 0, hyp, tol, {.nu = 2.0, .j = 1});
  sweep("sech_pow(nu=0.5)", FnId::sech_pow, 0, hyp, tol, {.nu = 0.5, .j = 1});
  sweep("cot", FnId::cot, 0, cot_grid, tol);

  report.elapsed_seconds = sw.seconds();
  return report;
}

CheckReport check_routes(int m_max, double tol) {
  if (m_max <= 0) m_max = 12;
  if (tol <= 0.0) tol = 1e-9;
  Stopwatch sw;
  CheckReport report;
  report.suite = "routes";

  const auto grid = linear_grid(0.1, 1.4, kGridPoints);

  auto run_routes = [&](FnId fn) {
    const auto methods = methods_for(fn);
    for (int m = 0; m <= m_max; ++m)
      for (double x : grid) {
        std::vector<DerivResult> results;
        for (Method method : methods) results.push_back(evaluate(fn, method, m, x));
        for (size_t a = 0; a < results.size(); ++a)
          for (size_t b = a + 1; b < results.size(); ++b)
            compare_case(report,
                         std::string(fn_id_name(fn)) + "[" + method_name(methods[a]) + " vs " +
                             method_name(methods[b]) + ",m=" + std::to_string(m) +
                             ",x=" + fmt(x) + "]",
                         results[a].value, results[b].value, tol, "route agreement");
        for (size_t a = 0; a < results.size(); ++a) {
          ++report.cases_run;
          const double bound = tol * std::max(1.0, std::fabs(results[a].value));
          if (!(std::fabs(results[a].residual_im) <= bound))
            report.failures.push_back(
                {std::string(fn_id_name(fn)) + "[residual," + method_name(methods[a]) +
                     ",m=" + std::to_string(m) + ",x=" + fmt(x) + "]",
                 "<= " + fmt(bound), fmt(results[a].residual_im), "imaginary residual"});
        }
      }
  };

  run_routes(FnId::tan);
  run_routes(FnId::sec);

  report.elapsed_seconds = sw.seconds();
  return report;
}

const std::vector<std::string>& check_suite_names() {
  static const std::vector<std::string> names = {"gf",       "oracle", "chebyshev",
                                                 "bell",     "operator", "routes"};
  return names;
}

std::optional<CheckReport> run_check_suite(const std::string& suite, int n_max, double tol) {
  if (suite == "gf") return check_gf(n_max);
  if (suite == "oracle") return check_oracle(n_max, tol);
  if (suite == "chebyshev") return check_chebyshev(n_max);
  if (suite == "bell") return check_bell(n_max);
  if (suite == "operator") return check_operator(n_max);
  if (suite == "routes") return check_routes(n_max, tol);
  return std::nullopt;
}

std::string render_report(const CheckReport& report) {
  std::ostringstream os;
  os << "suite " << report.suite << ": " << report.cases_run << " cases, "
     << report.failures.size() << " failures, " << report.elapsed_seconds << " s\n";
  for (const auto& f : report.failures)
    os << "  FAIL " << f.identifier << ": expected " << f.expected << ", got " << f.got << " ("
       << f.context << ")\n";
  return os.str();
}

}  // namespace derivkit
