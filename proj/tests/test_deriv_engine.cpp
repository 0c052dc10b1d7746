#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "deriv_engine.hpp"
#include "jet.hpp"

using namespace derivkit;

namespace {

double rel(double a, double b) {
  const double s = std::max(std::fabs(a), std::fabs(b));
  return s == 0.0 ? 0.0 : std::fabs(a - b) / s;
}

// Symbolic quotient-rule oracle for derivatives of 1/(1+x^2): keeps the
// value as num(x) / (1+x^2)^pow and differentiates exactly.
struct LorentzSymbolic {
  Poly num = Poly::one();
  int pow = 1;

  void differentiate() {
    const Poly w({Rational(1), Rational(0), Rational(1)});  // 1 + x^2
    // (N / w^p)' = (N' w - 2 p x N) / w^{p+1}
    num = num.derivative() * w -
          Rational(2 * pow) * (Poly::variable() * num);
    pow += 1;
  }

  Rational eval(const Rational& x) const {
    const Rational w = Rational(1) + x * x;
    return num.eval(x) / rational_pow(w, pow);
  }
};

}  // namespace

TEST_CASE("lorentz low orders") {
  // K_0 = 1/(1+x^2), K_1 = -2x/(1+x^2)^2
  for (const Rational x : {Rational(0), Rational(1, 3), Rational(-7, 5), Rational(4)}) {
    const Rational w = Rational(1) + x * x;
    CHECK(deriv_lorentz(0, x) == w.inverse());
    CHECK(deriv_lorentz(1, x) == Rational(-2) * x / (w * w));
  }
}

TEST_CASE("lorentz matches the symbolic quotient-rule oracle exactly") {
  LorentzSymbolic sym;
  for (int m = 0; m <= 8; ++m) {
    for (const Rational x : {Rational(0), Rational(1, 3), Rational(-2, 7), Rational(5, 2)}) {
      CAPTURE(m);
      CHECK(deriv_lorentz(m, x) == sym.eval(x));
    }
    sym.differentiate();
  }
}

TEST_CASE("lorentz float path against jet oracle") {
  for (int n = 0; n <= 12; ++n)
    for (double x : {-2.5, -0.9, 0.1, 0.7, 1.9}) {
      const double got = static_cast<double>(deriv_lorentz<long double>(n, x));
      const double want = nth_derivative(FnId::lorentz, n, x);
      CHECK(rel(got, want) < 1e-11);
    }
}

TEST_CASE("arctan derivatives") {
  CHECK(deriv_arctan(1, 0.37) == doctest::Approx(1.0 / (1.0 + 0.37 * 0.37)).epsilon(1e-15));
  CHECK(deriv_arctan(2, 0.0) == 0.0);
  CHECK(rel(deriv_arctan(7, 0.8), nth_derivative(FnId::arctan, 7, 0.8)) < 1e-12);
  // order zero falls back to the function value
  CHECK(deriv_arctan(0, 0.5) == doctest::Approx(std::atan(0.5)).epsilon(1e-16));
  CHECK(deriv_arctan_exact(1, Rational(1, 2)) == Rational(4, 5));
  CHECK_THROWS_AS(deriv_arctan_exact(0, Rational(1)), std::domain_error);
}

TEST_CASE("lorentz_pow reduces to lorentz at nu = 1") {
  for (int n = 0; n <= 10; ++n)
    for (double x : {-1.3, 0.2, 2.1}) {
      CHECK(rel(deriv_lorentz_pow(n, 1.0, x),
                static_cast<double>(deriv_lorentz<long double>(n, x))) < 1e-15);
    }
}

TEST_CASE("lorentz_pow examples") {
  const double x = 0.5;
  CHECK(deriv_lorentz_pow(0, 2.5, x) ==
        doctest::Approx(std::pow(1.0 + x * x, -2.5)).epsilon(1e-15));
  CHECK(rel(deriv_lorentz_pow(3, 2.0, 0.5), nth_derivative(FnId::lorentz_pow, 3, 0.5, {.nu = 2.0, .j = 1})) <
        1e-12);
  CHECK_THROWS_AS(deriv_lorentz_pow(1, -2.0, 0.5), std::domain_error);
}

TEST_CASE("arccos derivatives") {
  CHECK(deriv_arccos(1, 0.0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(deriv_arccos(2, 0.0) == doctest::Approx(0.0));
  CHECK(rel(deriv_arccos(5, 0.3), nth_derivative(FnId::arccos, 5, 0.3)) < 1e-10);
  CHECK_THROWS_AS(deriv_arccos(1, 1.0), std::domain_error);
  CHECK_THROWS_AS(deriv_arccos(1, -1.5), std::domain_error);
  CHECK_THROWS_AS(deriv_arccos(0, 0.3), std::domain_error);
}

TEST_CASE("sech derivatives at zero") {
  CHECK(deriv_sech(0, 0.0) == doctest::Approx(1.0));
  CHECK(deriv_sech(2, 0.0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(deriv_sech(4, 0.0) == doctest::Approx(5.0).epsilon(1e-14));
  // odd orders vanish at 0 (sech is even)
  CHECK(std::fabs(deriv_sech(3, 0.0)) < 1e-25);
}

TEST_CASE("sech matches oracle across orders and points") {
  for (int m = 0; m <= 12; ++m)
    for (double x : {-2.2, -1.0, 0.35, 1.3, 2.4}) {
      CAPTURE(m);
      CAPTURE(x);
      CHECK(rel(deriv_sech(m, x), nth_derivative(FnId::sech, m, x)) < 1e-11);
    }
}

TEST_CASE("sech_pow cross-route equality at nu = 1") {
  for (int m = 0; m <= 8; ++m)
    for (double x : {-1.7, -0.4, 0.6, 2.0}) {
      CAPTURE(m);
      CAPTURE(x);
      CHECK(rel(deriv_sech_pow(m, 1.0, x), deriv_sech(m, x)) < 1e-14);
    }
}

TEST_CASE("sech_pow basics and oracle agreement") {
  CHECK(deriv_sech_pow(0, 3.5, 0.8) ==
        doctest::Approx(std::pow(1.0 / std::cosh(0.8), 3.5)).epsilon(1e-14));
  CHECK(rel(deriv_sech_pow(3, 2.0, 0.7), nth_derivative(FnId::sech_pow, 3, 0.7, {.nu = 2.0, .j = 1})) <
        1e-11);
  CHECK_THROWS_AS(deriv_sech_pow(1, 0.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(deriv_sech_pow(1, -1.0, 0.5), std::domain_error);
}

TEST_CASE("sec derivatives") {
  CHECK(deriv_sec(0, 0.3).value == doctest::Approx(1.0 / std::cos(0.3)).epsilon(1e-15));
  const double x = 0.5;
  CHECK(deriv_sec(1, x).value ==
        doctest::Approx(std::tan(x) / std::cos(x)).epsilon(1e-14));
  CHECK(rel(deriv_sec(6, 0.3).value, nth_derivative(FnId::sec, 6, 0.3)) < 1e-12);
  CHECK_THROWS_AS(deriv_sec(2, std::acos(-1.0) / 2), SingularityError);
}

TEST_CASE("sec residuals stay tiny") {
  for (int m = 0; m <= 12; ++m)
    for (double x : {0.1, 0.8, 1.4}) {
      const auto r = deriv_sec(m, x);
      CHECK(std::fabs(r.residual_im) <= 1e-9 * std::max(1.0, std::fabs(r.value)));
    }
}

TEST_CASE("tan direct formula low orders") {
  // m = 0 recovers tan itself through the delta term
  for (double x : {0.15, 0.6, 1.2}) {
    CHECK(deriv_tan_direct(0, x).value == doctest::Approx(std::tan(x)).epsilon(1e-14));
    const double sec2 = 1.0 / (std::cos(x) * std::cos(x));
    CHECK(deriv_tan_direct(1, x).value == doctest::Approx(sec2).epsilon(1e-13));
    CHECK(deriv_tan_leibniz(1, x).value == doctest::Approx(sec2).epsilon(1e-13));
  }
}

TEST_CASE("tan routes agree with each other and the oracle") {
  for (int m = 0; m <= 12; ++m)
    for (double x : {0.1, 0.45, 0.9, 1.4}) {
      CAPTURE(m);
      CAPTURE(x);
      const double direct = deriv_tan_direct(m, x).value;
      const double leibniz = deriv_tan_leibniz(m, x).value;
      const double oracle = nth_derivative(FnId::tan, m, x);
      CHECK(rel(direct, leibniz) < 1e-11);
      CHECK(rel(direct, oracle) < 1e-11);
    }
}

TEST_CASE("tan m=8 spot check against oracle") {
  CHECK(rel(deriv_tan_direct(8, 0.2).value, nth_derivative(FnId::tan, 8, 0.2)) < 1e-12);
}

TEST_CASE("cot derivatives") {
  // m = 0: cos(x) sec(x - pi/2) = cot(x)
  for (double x : {0.3, 1.0, 2.5}) {
    CHECK(deriv_cot(0, x).value == doctest::Approx(1.0 / std::tan(x)).epsilon(1e-13));
  }
  // m = 1: -csc^2
  const double x = 1.0;
  const double csc2 = 1.0 / (std::sin(x) * std::sin(x));
  CHECK(deriv_cot(1, x).value == doctest::Approx(-csc2).epsilon(1e-13));
  CHECK(rel(deriv_cot(4, 0.7).value, nth_derivative(FnId::cot, 4, 0.7)) < 1e-11);
  CHECK_THROWS_AS(deriv_cot(2, 0.0), SingularityError);
  CHECK_THROWS_AS(deriv_cot(2, std::acos(-1.0)), SingularityError);
}

TEST_CASE("singularity tolerance uses the documented threshold") {
  const double near_pole = std::acos(-1.0) / 2 - 1e-9;  // inside the 1e-8 guard
  CHECK_THROWS_AS(deriv_sec(1, near_pole), SingularityError);
  const double outside = std::acos(-1.0) / 2 - 1e-6;
  CHECK_NOTHROW(deriv_sec(1, outside));
}

TEST_CASE("negative orders are rejected") {
  CHECK_THROWS_AS(deriv_sech(-1, 0.0), std::domain_error);
  CHECK_THROWS_AS(deriv_sec(-2, 0.3), std::domain_error);
  CHECK_THROWS_AS(deriv_arctan(-1, 0.3), std::domain_error);
}
