#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <thread>

#include "deriv_engine.hpp"
#include "derivative_polys.hpp"
#include "jet.hpp"

using namespace derivkit;

namespace {

double rel(double a, double b) {
  const double s = std::max(std::fabs(a), std::fabs(b));
  return s == 0.0 ? 0.0 : std::fabs(a - b) / s;
}

}  // namespace

TEST_CASE("pi polynomials low orders") {
  CHECK(pi_poly(0) == Poly::variable());
  CHECK(pi_poly(1) == Poly({Rational(1), Rational(0), Rational(1)}));
  CHECK(pi_poly(2) == Poly({Rational(0), Rational(2), Rational(0), Rational(2)}));
}

TEST_CASE("q polynomials low orders") {
  CHECK(q_poly(0) == Poly::one());
  CHECK(q_poly(1) == Poly::variable());
  CHECK(q_poly(2) == Poly({Rational(1), Rational(0), Rational(2)}));
}

TEST_CASE("degree and parity of the derivative polynomials") {
  for (int n = 0; n <= 30; ++n) {
    CHECK(pi_poly(n).degree() == n + 1);
    CHECK(pi_poly(n).has_parity(n + 1));
    CHECK(pi_poly(n).coeffs().back() > Rational(0));
    CHECK(q_poly(n).degree() == n);
    CHECK(q_poly(n).has_parity(n));
  }
}

TEST_CASE("euler numbers from Q at zero") {
  const long euler[] = {1, 1, 5, 61, 1385};
  for (int n = 0; n <= 4; ++n) CHECK(q_poly(2 * n).coeff(0) == Rational(euler[n]));
  // same numbers from the sec jet: (2n)! times the t^{2n} coefficient
  const auto sec = exact_jet(FnId::sec, 8);
  for (int n = 0; n <= 4; ++n)
    CHECK(sec.derivative_value(2 * n) == Rational(euler[n]));
}

TEST_CASE("lambda carriers") {
  CHECK(lambda_carrier(0, 3) == Poly::one());
  CHECK(lambda_carrier(1, 1) == Poly({Rational(0), Rational(-1)}));
  CHECK(lambda_carrier(2, 1) == Poly(Rational(-1)));
  // j = 0 is the constant family
  CHECK(lambda_carrier(0, 0) == Poly::one());
  for (int m = 1; m <= 6; ++m) CHECK(lambda_carrier(m, 0).is_zero());
}

TEST_CASE("delta elements") {
  // Delta_{0,j} = xi^j with no s part
  for (int j = 0; j <= 5; ++j) {
    const ExtElem d = delta_elem(0, j);
    CHECK(d.a() == Poly::monomial(j, Rational(1)));
    CHECK(d.b().is_zero());
  }
  // Delta_{1,1} = -s
  const ExtElem d11 = delta_elem(1, 1);
  CHECK(d11.a().is_zero());
  CHECK(d11.b() == Poly(Rational(-1)));
  // Delta_{2,1} = -xi
  const ExtElem d21 = delta_elem(2, 1);
  CHECK(d21.a() == Poly({Rational(0), Rational(-1)}));
  CHECK(d21.b().is_zero());
}

TEST_CASE("generating functions match recurrences exactly") {
  CHECK(gf_check_pi(0).ok());
  CHECK(gf_check_pi(20).ok());
  CHECK(gf_check_q(20).ok());
  for (int j = 0; j <= 4; ++j) {
    CAPTURE(j);
    CHECK(gf_check_lambda(20, j).ok());
    CHECK(gf_check_delta(20, j).ok());
  }
}

TEST_CASE("dp evaluation of tan and sec") {
  for (double x : {0.15, 0.7, 1.3}) {
    const double sec2 = 1.0 / (std::cos(x) * std::cos(x));
    CHECK(dp_tan(1, x) == doctest::Approx(sec2).epsilon(1e-14));
    const double s = 1.0 / std::cos(x);
    const double t = std::tan(x);
    CHECK(dp_sec(2, x) == doctest::Approx(s * (1.0 + 2.0 * t * t)).epsilon(1e-14));
  }
  CHECK(rel(dp_tan(5, 0.7), deriv_tan_direct(5, 0.7).value) < 1e-11);
  CHECK_THROWS_AS(dp_tan(1, std::acos(-1.0) / 2), SingularityError);
}

TEST_CASE("lambda route evaluates d^m cos^j for cos > 0") {
  for (int m = 0; m <= 10; ++m)
    for (int j = 0; j <= 4; ++j)
      for (double x : {-1.2, -0.4, 0.3, 0.9, 1.45}) {
        CAPTURE(m);
        CAPTURE(j);
        CAPTURE(x);
        const double want = nth_derivative(FnId::cos_pow, m, x, {.nu = 1.0, .j = j});
        CHECK(rel(lambda_cos_pow_deriv(m, j, x), want) < 1e-10);
      }
  CHECK_THROWS_AS(lambda_cos_pow_deriv(1, 1, 2.0), std::domain_error);
}

TEST_CASE("delta route evaluates d^m cos^j everywhere") {
  for (int m = 0; m <= 10; ++m)
    for (int j = 0; j <= 4; ++j)
      for (double x : {-2.6, -0.4, 0.3, 1.9, 2.8}) {
        CAPTURE(m);
        CAPTURE(j);
        CAPTURE(x);
        const double want = nth_derivative(FnId::cos_pow, m, x, {.nu = 1.0, .j = j});
        CHECK(rel(delta_cos_pow_deriv(m, j, x), want) < 1e-10);
      }
}

TEST_CASE("sign conventions are fixed by the oracle") {
  // Exactly one sign convention survives: no (-1)^j on the lambda route and
  // no (-1)^m on the delta route. The flipped variants disagree wherever the
  // exponent is odd.
  const double x = 0.6;
  double max_plain_lambda = 0, max_flipped_lambda = 0;
  double max_plain_delta = 0, max_flipped_delta = 0;
  for (int m = 0; m <= 8; ++m)
    for (int j = 1; j <= 4; ++j) {
      const double want = nth_derivative(FnId::cos_pow, m, x, {.nu = 1.0, .j = j});
      const double lam = lambda_cos_pow_deriv(m, j, x);
      const double del = delta_cos_pow_deriv(m, j, x);
      const double sign_j = (j % 2 == 0) ? 1.0 : -1.0;
      const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
      max_plain_lambda = std::max(max_plain_lambda, rel(lam, want));
      max_flipped_lambda = std::max(max_flipped_lambda, rel(sign_j * lam, want));
      max_plain_delta = std::max(max_plain_delta, rel(del, want));
      max_flipped_delta = std::max(max_flipped_delta, rel(sign_m * del, want));
    }
  CHECK(max_plain_lambda < 1e-10);
  CHECK(max_flipped_lambda > 1e-2);
  CHECK(max_plain_delta < 1e-10);
  CHECK(max_flipped_delta > 1e-2);
}

TEST_CASE("hoppe coefficients and sec route") {
  // A_{m,0} = d^m(1) = delta_{m,0}
  CHECK(hoppe_a(0, 0, 0.4) == doctest::Approx(1.0));
  CHECK(hoppe_a(3, 0, 0.4) == doctest::Approx(0.0));
  // m = 0: A_{0,k} = (g - g)^k = 0 for k >= 1
  CHECK(hoppe_a(0, 2, 0.4) == doctest::Approx(0.0).epsilon(1e-14));

  CHECK(hoppe_sec(0, 0.4) == doctest::Approx(1.0 / std::cos(0.4)).epsilon(1e-14));
  const double x = 0.5;
  CHECK(hoppe_sec(1, x) == doctest::Approx(std::tan(x) / std::cos(x)).epsilon(1e-13));
  for (int m = 0; m <= 12; ++m)
    for (double x2 : {0.1, 0.3, 0.8, 1.3}) {
      CAPTURE(m);
      CAPTURE(x2);
      CHECK(rel(hoppe_sec(m, x2), deriv_sec(m, x2).value) < 1e-10);
      CHECK(rel(hoppe_sec(m, x2), dp_sec(m, x2)) < 1e-10);
    }
}

TEST_CASE("hoppe expansion reassembles from its coefficients") {
  // d^m sec = sum_k (-1)^k sec^{k+1} A_{m,k}
  for (int m = 0; m <= 8; ++m)
    for (double x : {0.3, 0.9}) {
      double acc = 0.0;
      const double secv = 1.0 / std::cos(x);
      double sec_pow = secv;
      for (int k = 0; k <= m; ++k) {
        acc += (k % 2 == 0 ? 1.0 : -1.0) * sec_pow * hoppe_a(m, k, x);
        sec_pow *= secv;
      }
      CHECK(rel(acc, deriv_sec(m, x).value) < 1e-10);
    }
}

TEST_CASE("lie flow identity") {
  // t = 0 reproduces f(xi) exactly
  const auto at_zero = lie_flow_check(0.0, 0.7, FlowFn::identity);
  CHECK(at_zero.converged);
  CHECK(at_zero.abs_error == doctest::Approx(0.0));

  const auto id = lie_flow_check(0.1, 0.2, FlowFn::identity, 25);
  CHECK(id.converged);
  CHECK(id.abs_error < 1e-12 * std::max(1.0, std::fabs(id.closed_value)));

  const auto root = lie_flow_check(0.1, 0.2, FlowFn::sqrt_one_plus_sq, 25);
  CHECK(root.converged);
  CHECK(root.abs_error < 1e-12 * std::max(1.0, std::fabs(root.closed_value)));
}

TEST_CASE("lie flow outside the convergence radius reports, not fails") {
  // large t with xi near the flow pole: truncation still visibly moving
  const auto r = lie_flow_check(1.2, 0.9, FlowFn::identity, 25);
  CHECK(!r.converged);
  // cos t = xi sin t at xi = 1, t = pi/4: the flow map pole itself
  CHECK_THROWS_AS(lie_flow_check(std::acos(-1.0) / 4, 1.0, FlowFn::identity),
                  SingularityError);
}

TEST_CASE("dp caches are safe under concurrent access") {
  std::vector<std::thread> threads;
  std::vector<Poly> pis(6), qs(6);
  for (int t = 0; t < 6; ++t)
    threads.emplace_back([t, &pis, &qs] {
      pis[static_cast<size_t>(t)] = pi_poly(25);
      qs[static_cast<size_t>(t)] = q_poly(25);
      (void)lambda_carrier(15, 3);
      (void)delta_elem(15, 3);
    });
  for (auto& th : threads) th.join();
  for (int t = 1; t < 6; ++t) {
    CHECK(pis[static_cast<size_t>(t)] == pis[0]);
    CHECK(qs[static_cast<size_t>(t)] == qs[0]);
  }
}
