#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ext_ring.hpp"
#include "series.hpp"

using namespace derivkit;

namespace {

std::mt19937 rng(77031u);

Poly random_poly(int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  const int d = deg(rng);
  std::vector<Rational> c;
  for (int i = 0; i <= d; ++i) c.push_back(Rational(num(rng), den(rng)));
  return Poly(std::move(c));
}

ExtElem random_elem(Sigma sigma) { return ExtElem(random_poly(5), random_poly(5), sigma); }

}  // namespace

TEST_CASE("s squared equals sigma in both rings") {
  for (Sigma sigma : {Sigma::one_plus_xi2, Sigma::one_minus_xi2}) {
    const ExtElem s(Poly(), Poly::one(), sigma);
    const ExtElem s2 = s * s;
    CHECK(s2.a() == sigma_poly(sigma));
    CHECK(s2.b().is_zero());
  }
}

TEST_CASE("ring axioms on random elements") {
  for (Sigma sigma : {Sigma::one_plus_xi2, Sigma::one_minus_xi2})
    for (int trial = 0; trial < 100; ++trial) {
      const ExtElem a = random_elem(sigma), b = random_elem(sigma), c = random_elem(sigma);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
    }
}

TEST_CASE("mixed rings are rejected") {
  const ExtElem a = random_elem(Sigma::one_plus_xi2);
  const ExtElem b = random_elem(Sigma::one_minus_xi2);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("eval substitutes xi and s") {
  // (xi + 2 s) at xi = 3/5, s = 4/5 under s^2 = 1 - xi^2
  const ExtElem e(Poly::variable(), Poly(Rational(2)), Sigma::one_minus_xi2);
  CHECK(e.eval(Rational(3, 5), Rational(4, 5)) == Rational(11, 5));
}

TEST_CASE("minus s d applied to xi gives minus s") {
  const ExtElem xi = ExtElem::from_a(Poly::variable(), Sigma::one_minus_xi2);
  const ExtElem out = ext_apply_d(xi, DOperator::s_weight(-1));
  CHECK(out.a().is_zero());
  CHECK(out.b() == Poly(Rational(-1)));
}

TEST_CASE("minus s d kills constants") {
  const ExtElem c = ExtElem::from_a(Poly(Rational(7)), Sigma::one_minus_xi2);
  CHECK(ext_apply_d(c, DOperator::s_weight(-1)).is_zero());
}

TEST_CASE("weighted operator on xi in the plus ring") {
  // (1+xi^2) d/dxi applied to xi gives 1+xi^2
  const Poly w({Rational(1), Rational(0), Rational(1)});
  const ExtElem xi = ExtElem::from_a(Poly::variable(), Sigma::one_plus_xi2);
  const ExtElem out = ext_apply_d(xi, DOperator::poly_weight(w, +1));
  CHECK(out.a() == w);
  CHECK(out.b().is_zero());
}

TEST_CASE("s part closure of the weighted operator") {
  // (1+xi^2) d/dxi on s: d(s)/dxi = xi/s, so the image is xi * s.
  const Poly w({Rational(1), Rational(0), Rational(1)});
  const ExtElem s(Poly(), Poly::one(), Sigma::one_plus_xi2);
  const ExtElem out = ext_apply_d(s, DOperator::poly_weight(w, +1));
  CHECK(out.a().is_zero());
  CHECK(out.b() == Poly::variable());
}

TEST_CASE("ring closure violation is a configuration error") {
  // weight xi with sigma = 1+xi^2: xi * 2xi / (2 + 2xi^2) is not polynomial
  const ExtElem e = random_elem(Sigma::one_plus_xi2);
  CHECK_THROWS_AS(ext_apply_d(e, DOperator::poly_weight(Poly::variable(), +1)),
                  std::invalid_argument);
}

TEST_CASE("operator is linear") {
  const DOperator op = DOperator::s_weight(-1);
  for (int trial = 0; trial < 50; ++trial) {
    const ExtElem a = random_elem(Sigma::one_minus_xi2);
    const ExtElem b = random_elem(Sigma::one_minus_xi2);
    CHECK(ext_apply_d(a + b, op) == ext_apply_d(a, op) + ext_apply_d(b, op));
  }
}

TEST_CASE("series over the extension ring") {
  const ExtElem zero = ExtElem::zero(Sigma::one_minus_xi2);
  const ExtElem one = ExtElem::one(Sigma::one_minus_xi2);
  SeriesInT<ExtElem> s(4, zero);
  s.set_coeff(0, one);
  s.set_coeff(1, ExtElem(Poly(), Poly::one(), Sigma::one_minus_xi2));  // 1 + s t
  const auto sq = s * s;
  CHECK(sq.coeff(0) == one);
  CHECK(sq.coeff(1) == Rational(2) * ExtElem(Poly(), Poly::one(), Sigma::one_minus_xi2));
  // t^2 coefficient is s^2 = 1 - xi^2
  CHECK(sq.coeff(2) == ExtElem::from_a(sigma_poly(Sigma::one_minus_xi2), Sigma::one_minus_xi2));
}

TEST_CASE("series reciprocal against multiplication") {
  SeriesInT<Poly> s(6, Poly());
  s.set_coeff(0, Poly::one());
  s.set_coeff(1, -Poly::variable());
  s.set_coeff(3, Poly(Rational(1, 3)));
  const auto inv = s.recip_unit(Poly::one());
  const auto prod = s * inv;
  CHECK(prod.coeff(0) == Poly::one());
  for (int k = 1; k <= 6; ++k) CHECK(prod.coeff(k).is_zero());
}

TEST_CASE("series reciprocal requires unit constant term") {
  SeriesInT<Poly> s(3, Poly());
  s.set_coeff(0, Poly::variable());
  CHECK_THROWS_AS(s.recip_unit(Poly::one()), std::invalid_argument);
}
