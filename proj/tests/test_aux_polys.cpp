#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "aux_polys.hpp"
#include "jet.hpp"

using namespace derivkit;

namespace {

std::mt19937 rng(424242u);

Rational random_rational() {
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 7);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("two-variable hermite basics") {
  CHECK(hermite2(0, Rational(3), Rational(5)) == Rational(1));
  // H_2(x,y) = x^2 + 2y at random rational points
  for (int trial = 0; trial < 40; ++trial) {
    const Rational x = random_rational(), y = random_rational();
    CHECK(hermite2(2, x, y) == x * x + Rational(2) * y);
  }
  // H_n(x, 0) = x^n
  for (int n = 0; n <= 9; ++n)
    CHECK(hermite2(n, Rational(2, 3), Rational(0)) == rational_pow(Rational(2, 3), n));
}

TEST_CASE("hermite recurrence H_{n+1} = x H_n + 2 y n H_{n-1}") {
  for (int trial = 0; trial < 30; ++trial) {
    const Rational x = random_rational(), y = random_rational();
    for (int n = 1; n <= 10; ++n) {
      const Rational lhs = hermite2(n + 1, x, y);
      const Rational rhs =
          x * hermite2(n, x, y) + Rational(2 * n) * y * hermite2(n - 1, x, y);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("third derivative of the gaussian via hermite") {
  // d^3/dx^3 e^{-x^2} at 1/2 equals H_3(-1,-1) e^{-1/4};
  // H_3(-1,-1) = (-1)^3 + 6 (-1)(-1) = 5.
  CHECK(hermite2(3, Rational(-1), Rational(-1)) == Rational(5));
  const int order = 3;
  auto x = Jet<long double>::variable(0.5L, order);
  const auto gauss = jet_exp(-(x * x));
  const double jet_value = static_cast<double>(gauss.derivative_value(3));
  const double closed = 5.0 * std::exp(-0.25);
  CHECK(jet_value == doctest::Approx(closed).epsilon(1e-13));
}

TEST_CASE("pn low orders and frozen values") {
  CHECK(pn(0, Rational(7), Rational(9)) == Rational(1));
  for (int trial = 0; trial < 30; ++trial) {
    const Rational x = random_rational(), y = random_rational();
    CHECK(pn(1, x, y) == x);
    CHECK(pn(2, x, y) == Rational(2) * x * x + Rational(2) * y);
  }
  CHECK(pn(4, Rational(1), Rational(1)) == Rational(120));
  // P_{-1} = 0 convention
  CHECK(pn(-1, Rational(3), Rational(4)) == Rational(0));
}

TEST_CASE("pn parity in x") {
  for (int n = 0; n <= 20; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      const Rational x = random_rational(), y = random_rational();
      const Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
      CHECK(pn(n, -x, y) == sign * pn(n, x, y));
    }
}

TEST_CASE("pn at y = 0 collapses to n! x^n") {
  for (int n = 0; n <= 10; ++n)
    CHECK(pn(n, Rational(3, 2), Rational(0)) ==
          Rational(factorial(static_cast<unsigned long>(n))) * rational_pow(Rational(3, 2), n));
}

TEST_CASE("pn coefficients are the gamma-integrated hermite coefficients") {
  // term r of P_n carries an extra (n-r)! relative to term r of H_n
  for (int n = 0; n <= 12; ++n)
    for (int r = 0; 2 * r <= n; ++r)
      CHECK(pn_coeff(n, r) ==
            hermite2_coeff(n, r) * factorial(static_cast<unsigned long>(n - r)));
}

TEST_CASE("pn_nu reduces to pn at nu = 1") {
  for (int n = 0; n <= 10; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      const Rational x = random_rational(), y = random_rational();
      CHECK(pn_nu(n, Rational(1), x, y) == pn(n, x, y));
    }
}

TEST_CASE("pn_nu frozen values and pole rejection") {
  CHECK(pn_nu(0, Rational(7, 2), Rational(1), Rational(1)) == Rational(1));
  // P_1^{1/2}(x, y) = x/2
  for (int trial = 0; trial < 20; ++trial) {
    const Rational x = random_rational();
    CHECK(pn_nu(1, Rational(1, 2), x, random_rational()) == x * Rational(1, 2));
  }
  CHECK_THROWS_AS(pn_nu(2, Rational(0), Rational(1), Rational(1)), std::domain_error);
  CHECK_THROWS_AS(pn_nu(2, Rational(-3), Rational(1), Rational(1)), std::domain_error);
  CHECK_THROWS_AS(pn_nu(2, -1.0, 1.0, 1.0), std::domain_error);
  CHECK_NOTHROW(pn_nu(2, Rational(-1, 2), Rational(1), Rational(1)));
}

TEST_CASE("one-variable reduction") {
  for (int trial = 0; trial < 20; ++trial) {
    const Rational z = random_rational();
    CHECK(pn_one_var(1, z) == z);
    CHECK(pn_one_var(2, z) == Rational(2) * (z * z - Rational(1)));
  }
  // pn(n, x, -1) = pn_one_var(n, x)
  for (int n = 0; n <= 15; ++n)
    for (int trial = 0; trial < 8; ++trial) {
      const Rational x = random_rational();
      CHECK(pn(n, x, Rational(-1)) == pn_one_var(n, x));
    }
}

TEST_CASE("general y < 0 reduction uses (-y)^(n/2)") {
  // P_n(x, y) = c^n P_n(x/c) with c = sqrt(-y); checked at y = -c^2 for
  // rational c so everything stays exact.
  for (const Rational c : {Rational(2), Rational(1, 2), Rational(3)}) {
    const Rational y = -(c * c);
    for (int n = 0; n <= 12; ++n)
      for (int trial = 0; trial < 5; ++trial) {
        const Rational x = random_rational();
        CHECK(pn(n, x, y) == rational_pow(c, n) * pn_one_var(n, x / c));
      }
  }
}

TEST_CASE("chebyshev u basics") {
  CHECK(chebyshev_u(0, Rational(5)) == Rational(1));
  for (int trial = 0; trial < 20; ++trial) {
    const Rational x = random_rational();
    CHECK(chebyshev_u(1, x) == Rational(2) * x);
    CHECK(chebyshev_u(2, x) == Rational(4) * x * x - Rational(1));
  }
  CHECK(chebyshev_u_poly(3) == Poly({Rational(0), Rational(-4), Rational(0), Rational(8)}));
}

TEST_CASE("pn(2x,-1)/n! equals chebyshev U_n as exact polynomials") {
  BigInt nfact(1);
  for (int n = 0; n <= 50; ++n) {
    if (n > 0) nfact *= n;
    CHECK(pn_2x_m1_poly(n) == Rational(nfact) * chebyshev_u_poly(n));
  }
}

TEST_CASE("pn one-var generating function expansion") {
  CHECK(pn_gf_check(0).ok());
  const auto small = pn_gf_check(2);
  CHECK(small.ok());
  CHECK(small.orders_checked == 3);
  const auto big = pn_gf_check(20);
  CHECK(big.ok());
  CHECK(big.orders_checked == 21);
}

TEST_CASE("float path of pn matches rational path") {
  for (int n = 0; n <= 10; ++n) {
    const Rational x(7, 9), y(-3, 5);
    const double exact = pn(n, x, y).to_double();
    const double approx = pn(n, x.to_double(), y.to_double());
    CHECK(approx == doctest::Approx(exact).epsilon(1e-12));
  }
}
