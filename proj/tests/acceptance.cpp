// Acceptance suite: every release gate in one binary, one PASS/FAIL line per
// criterion, exit 0 only when all of them hold. Tolerances are pinned here,
// in code, and are not configurable.
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "aux_polys.hpp"
#include "checks.hpp"
#include "combinatorics.hpp"
#include "deriv_engine.hpp"
#include "derivative_polys.hpp"
#include "evaluator.hpp"
#include "jet.hpp"

using namespace derivkit;

namespace {

double rel(double a, double b) {
  const double s = std::max(std::fabs(a), std::fabs(b));
  return s == 0.0 ? 0.0 : std::fabs(a - b) / s;
}

// --- criterion 1: exact generating functions, order 20, zero tolerance ----

bool criterion_gf(std::string& detail) {
  int orders = 0;
  bool ok = true;
  auto absorb = [&](const GfReport& r, const char* name) {
    orders += r.orders_checked;
    if (!r.ok()) {
      ok = false;
      detail += std::string(" ") + name + " first mismatch at order " +
                std::to_string(r.mismatches.front().order) + ";";
    }
  };
  absorb(gf_check_pi(20), "Pi");
  absorb(gf_check_q(20), "Q");
  for (int j = 0; j <= 4; ++j) {
    absorb(gf_check_lambda(20, j), "Lambda");
    absorb(gf_check_delta(20, j), "Delta");
  }
  absorb(pn_gf_check(20), "P_one_var");
  if (ok) detail = std::to_string(orders) + " exact coefficient rows";
  return ok;
}

// --- criterion 2: Chebyshev identity to n = 50, exact ----------------------

bool criterion_chebyshev(std::string& detail) {
  BigInt nfact(1);
  for (int n = 0; n <= 50; ++n) {
    if (n > 0) nfact *= n;
    if (pn_2x_m1_poly(n) != Rational(nfact) * chebyshev_u_poly(n)) {
      detail = "mismatch at n = " + std::to_string(n);
      return false;
    }
  }
  detail = "51 exact polynomial identities";
  return true;
}

// --- criterion 3: Stirling / Touchard suite, exact --------------------------

bool criterion_stirling_touchard(std::string& detail) {
  for (unsigned n = 0; n <= 25; ++n)
    for (unsigned k = 0; k <= n; ++k)
      if (stirling2_sum(n, k) != stirling2(n, k)) {
        detail = "explicit sum != recurrence at (" + std::to_string(n) + "," +
                 std::to_string(k) + ")";
        return false;
      }

  const std::vector<Rational> points = {Rational(2),    Rational(1, 2), Rational(-3, 2),
                                        Rational(5, 3), Rational(-7, 4), Rational(9, 5),
                                        Rational(-1, 5)};
  for (int p = 0; p <= 6; ++p)
    for (int n = 0; n <= 15; ++n)
      for (size_t i = 0; i <= static_cast<size_t>(p); ++i) {
        const Rational& xi = points[i];
        std::vector<Rational> derivs;
        for (int r = 0; r <= n; ++r) {
          if (r > p) {
            derivs.emplace_back(0);
            continue;
          }
          Rational ff(1);
          for (int q = 0; q < r; ++q) ff *= Rational(p - q);
          derivs.push_back(ff * rational_pow(xi, p - r));
        }
        if (xd_expand_apply<Rational>(static_cast<unsigned>(n), derivs, xi) !=
            rational_pow(Rational(p), n) * rational_pow(xi, p)) {
          detail = "(x d/dx)^n x^p failed at p=" + std::to_string(p) +
                   " n=" + std::to_string(n);
          return false;
        }
      }

  const auto bell = bell_numbers(20);
  for (unsigned n = 0; n <= 20; ++n)
    if (touchard(n).eval(Rational(1)) != Rational(bell[n])) {
      detail = "T_n(1) != Bell at n = " + std::to_string(n);
      return false;
    }
  detail = "sum=recurrence to n=25, operator identity to (6,15), Bell to n=20";
  return true;
}

// --- criterion 4: route agreement for tan and sec ---------------------------

bool criterion_routes(std::string& detail) {
  const auto report = check_routes(12, 1e-9);
  if (!report.ok()) {
    detail = report.failures.front().identifier + " expected " +
             report.failures.front().expected + " got " + report.failures.front().got;
    return false;
  }
  detail = std::to_string(report.cases_run) + " comparisons within 1e-9";
  return true;
}

// --- criterion 5: closed forms vs jet oracle + exact lorentz oracle ---------

struct LorentzSymbolic {
  Poly num = Poly::one();
  int pow = 1;
  void differentiate() {
    const Poly w({Rational(1), Rational(0), Rational(1)});
    num = num.derivative() * w - Rational(2 * pow) * (Poly::variable() * num);
    pow += 1;
  }
  Rational eval(const Rational& x) const {
    return num.eval(x) / rational_pow(Rational(1) + x * x, pow);
  }
};

bool criterion_oracle(std::string& detail) {
  const auto report = check_oracle(12, 1e-9);
  if (!report.ok()) {
    detail = report.failures.front().identifier + " expected " +
             report.failures.front().expected + " got " + report.failures.front().got;
    return false;
  }

  LorentzSymbolic sym;
  for (int m = 0; m <= 8; ++m) {
    for (const Rational& x :
         {Rational(0), Rational(1, 3), Rational(-2, 7), Rational(5, 2), Rational(-9, 4)}) {
      if (deriv_lorentz(m, x) != sym.eval(x)) {
        detail = "exact lorentz mismatch at m=" + std::to_string(m) + ", x=" + x.str();
        return false;
      }
    }
    sym.differentiate();
  }
  detail = std::to_string(report.cases_run) +
           " float cases (1e-9, radical-free 1e-10) + 45 exact lorentz cases";
  return true;
}

// --- criterion 6: Euler numbers --------------------------------------------

bool criterion_euler(std::string& detail) {
  const long expected[] = {1, 1, 5, 61, 1385};
  for (int n = 0; n <= 4; ++n)
    if (q_poly(2 * n).coeff(0) != Rational(expected[n])) {
      detail = "Q_{2n}(0) wrong at n = " + std::to_string(n);
      return false;
    }
  detail = "Q_0..Q_8 constant terms are 1, 1, 5, 61, 1385";
  return true;
}

// --- criterion 7: sign-convention adjudication ------------------------------

bool criterion_signs(std::string& detail) {
  // Candidate conventions: a prefactor (-1)^j on the Lambda route and
  // (-1)^m on the Delta route, versus no prefactor. The jet oracle must
  // accept exactly one of each pair, and it must be the bare one.
  double lambda_plain = 0, lambda_flipped = 0, delta_plain = 0, delta_flipped = 0;
  const auto grid = linear_grid(-1.2, 1.2, 7);  // cos > 0 for the Lambda branch
  const auto wide = linear_grid(-2.8, 2.8, 9);
  for (int m = 0; m <= 10; ++m)
    for (int j = 1; j <= 4; ++j) {
      for (double x : grid) {
        const double want = nth_derivative(FnId::cos_pow, m, x, {.nu = 1.0, .j = j});
        const double lam = lambda_cos_pow_deriv(m, j, x);
        lambda_plain = std::max(lambda_plain, rel(lam, want));
        lambda_flipped = std::max(lambda_flipped, rel((j % 2 ? -lam : lam), want));
      }
      for (double x : wide) {
        const double want = nth_derivative(FnId::cos_pow, m, x, {.nu = 1.0, .j = j});
        const double del = delta_cos_pow_deriv(m, j, x);
        delta_plain = std::max(delta_plain, rel(del, want));
        delta_flipped = std::max(delta_flipped, rel((m % 2 ? -del : del), want));
      }
    }
  const bool lambda_ok = lambda_plain < 1e-9 && lambda_flipped > 1e-2;
  const bool delta_ok = delta_plain < 1e-9 && delta_flipped > 1e-2;
  if (!lambda_ok || !delta_ok) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "lambda plain %.2e flipped %.2e; delta plain %.2e flipped %.2e",
                  lambda_plain, lambda_flipped, delta_plain, delta_flipped);
    detail = buf;
    return false;
  }
  detail = "Lambda carries no (-1)^j prefactor, Delta carries no (-1)^m prefactor";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"exact generating functions (Pi, Q, Lambda j<=4, Delta j<=4, one-var P) to order 20",
       criterion_gf},
      {"Chebyshev identity P_n(2x,-1)/n! = U_n(x) for n <= 50", criterion_chebyshev},
      {"Stirling/Touchard suite (sum=recurrence, Euler operator, Bell numbers)",
       criterion_stirling_touchard},
      {"route agreement for tan and sec (closed/dp/hoppe/leibniz/oracle, m <= 12)",
       criterion_routes},
      {"closed-form evaluators vs jet oracle (1e-9, radical-free 1e-10) and exact "
       "quotient-rule oracle",
       criterion_oracle},
      {"Euler-number spot check Q_{2n}(0) = {1, 1, 5, 61, 1385}", criterion_euler},
      {"sign-convention adjudication for Lambda and Delta", criterion_signs},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("[%s] criterion %zu: %s -- %s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name, detail.c_str());
  }
  if (failures == 0)
    std::printf("ACCEPTANCE: all %zu criteria passed\n", criteria.size());
  else
    std::printf("ACCEPTANCE: %d of %zu criteria FAILED\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
