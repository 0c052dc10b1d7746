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

#include "derivative_polys.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "jet.hpp"
#include "series.hpp"

namespace derivkit {

namespace {

using LD = long double;

const Poly& one_plus_xi2() {
  static const Poly p({Rational(1), Rational(0), Rational(1)});
  return p;
}

// Each family is a monotonically growing vector of exact objects behind one
// mutex; orders are tiny (tens), contention is irrelevant.
class PiCache {
 public:
  Poly get(int n) {
    std::lock_guard<std::mutex> lock(mu_);
    if (v_.empty()) v_.push_back(Poly::variable());
    while (static_cast<int>(v_.size()) <= n)
      v_.push_back(one_plus_xi2() * v_.back().derivative());
    return v_[static_cast<size_t>(n)];
  }

 private:
  std::mutex mu_;
  std::vector<Poly> v_;
};

class QCache {
 public:
  Poly get(int n) {
    std::lock_guard<std::mutex> lock(mu_);
    if (v_.empty()) v_.push_back(Poly::one());
    while (static_cast<int>(v_.size()) <= n) {
      const Poly& q = v_.back();
      v_.push_back(one_plus_xi2() * q.derivative() + Poly::variable() * q);
    }
    return v_[static_cast<size_t>(n)];
  }

 private:
  std::mutex mu_;
  std::vector<Poly> v_;
};

class LambdaCache {
 public:
  Poly get(int m, int j) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& v = per_j_[j];
    if (v.empty()) v.push_back(Poly::one());
    while (static_cast<int>(v.size()) <= m) {
      const Poly& l = v.back();
      v.push_back(one_plus_xi2() * l.derivative() -
                  Rational(j) * (Poly::variable() * l));
    }
    return v[static_cast<size_t>(m)];
  }

 private:
  std::mutex mu_;
  std::map<int, std::vector<Poly>> per_j_;
};

class DeltaCache {
 public:
  ExtElem get(int m, int j) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& v = per_j_.try_emplace(j).first->second;
    if (v.empty())
      v.push_back(ExtElem::from_a(Poly::monomial(j, Rational(1)), Sigma::one_minus_xi2));
    const DOperator op = DOperator::s_weight(-1);
    while (static_cast<int>(v.size()) <= m) v.push_back(ext_apply_d(v.back(), op));
    return v[static_cast<size_t>(m)];
  }

 private:
  std::mutex mu_;
  std::map<int, std::vector<ExtElem>> per_j_;
};

PiCache& pi_cache() { static PiCache c; return c; }
QCache& q_cache() { static QCache c; return c; }
LambdaCache& lambda_cache() { static LambdaCache c; return c; }
DeltaCache& delta_cache() { static DeltaCache c; return c; }

void require_nonneg(int v, const char* what) {
  if (v < 0) throw std::domain_error(std::string(what) + ": negative argument");
}

LD require_cos_away_from_zero(LD x, const char* who) {
  const LD c = std::cos(x);
  if (std::fabs(c) < static_cast<LD>(kSingularTol))
    throw SingularityError(std::string(who) + ": cos(x) within singular tolerance");
  return c;
}

// Series in t over constant polynomials, from exact Maclaurin coefficients.
SeriesInT<Poly> const_series(const std::vector<Rational>& coeffs, int order) {
  SeriesInT<Poly> s(order, Poly());
  for (int k = 0; k <= order; ++k) s.set_coeff(k, Poly(coeffs[static_cast<size_t>(k)]));
  return s;
}

// 1 - xi * tan t as a series over polynomials in xi.
SeriesInT<Poly> one_minus_xi_tan(const std::vector<Rational>& tan_c, int order) {
  SeriesInT<Poly> s(order, Poly());
  s.set_coeff(0, Poly::one());
  for (int k = 1; k <= order; ++k)
    s.set_coeff(k, Poly::monomial(1, -tan_c[static_cast<size_t>(k)]));
  return s;
}

GfReport compare_series_with_family(const SeriesInT<Poly>& gf, int n_max,
                                    Poly (*family)(int), const char* name) {
  GfReport report;
  BigInt nfact(1);
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) nfact *= n;
    const Poly got = Rational(nfact) * gf.coeff(n);
    const Poly want = family(n);
    if (got != want) {
      std::ostringstream os;
      os << name << " order " << n << ": generating function gives " << got
         << ", recurrence gives " << want;
      report.mismatches.push_back({n, os.str()});
    }
    ++report.orders_checked;
  }
  return report;
}

}  // namespace

Poly pi_poly(int n) {
  require_nonneg(n, "pi_poly");
  return pi_cache().get(n);
}

Poly q_poly(int n) {
  require_nonneg(n, "q_poly");
  return q_cache().get(n);
}

Poly lambda_carrier(int m, int j) {
  require_nonneg(m, "lambda_carrier");
  require_nonneg(j, "lambda_carrier");
  return lambda_cache().get(m, j);
}

ExtElem delta_elem(int m, int j) {
  require_nonneg(m, "delta_elem");
  require_nonneg(j, "delta_elem");
  return delta_cache().get(m, j);
}

double dp_tan(int m, double x) {
  require_nonneg(m, "dp_tan");
  const LD lx = static_cast<LD>(x);
  require_cos_away_from_zero(lx, "dp_tan");
  return static_cast<double>(pi_poly(m).eval<LD>(std::tan(lx)));
}

double dp_sec(int m, double x) {
  require_nonneg(m, "dp_sec");
  const LD lx = static_cast<LD>(x);
  const LD c = require_cos_away_from_zero(lx, "dp_sec");
  return static_cast<double>(q_poly(m).eval<LD>(std::tan(lx)) / c);
}

double lambda_cos_pow_deriv(int m, int j, double x) {
  require_nonneg(m, "lambda_cos_pow_deriv");
  require_nonneg(j, "lambda_cos_pow_deriv");
  const LD lx = static_cast<LD>(x);
  const LD c = std::cos(lx);
  if (c < static_cast<LD>(kSingularTol))
    throw std::domain_error("lambda_cos_pow_deriv: needs cos(x) > 0");
  const LD carrier = lambda_carrier(m, j).eval<LD>(std::tan(lx));
  return static_cast<double>(carrier * std::pow(c, static_cast<LD>(j)));
}

double delta_cos_pow_deriv(int m, int j, double x) {
  require_nonneg(m, "delta_cos_pow_deriv");
  require_nonneg(j, "delta_cos_pow_deriv");
  const LD lx = static_cast<LD>(x);
  return static_cast<double>(
      delta_elem(m, j).eval<LD>(std::cos(lx), std::sin(lx)));
}

double hoppe_a(int m, int k, double x) {
  require_nonneg(m, "hoppe_a");
  require_nonneg(k, "hoppe_a");
  const LD lx = static_cast<LD>(x);
  const LD c = std::cos(lx);
  LD acc = 0.0L;
  for (int j = 0; j <= k; ++j) {
    LD term = to_long_double(binomial(static_cast<unsigned long>(k),
                                      static_cast<unsigned long>(j))) *
              std::pow(c, static_cast<LD>(k - j)) *
              static_cast<LD>(delta_cos_pow_deriv(m, j, x));
    if ((k - j) % 2 == 1) term = -term;
    acc += term;
  }
  return static_cast<double>(acc);
}

double hoppe_sec(int m, double x) {
  require_nonneg(m, "hoppe_sec");
  const LD lx = static_cast<LD>(x);
  const LD c = require_cos_away_from_zero(lx, "hoppe_sec");
  const LD secv = 1.0L / c;
  LD acc = 0.0L;
  LD sec_pow = secv;  // sec^{k+1}
  for (int k = 0; k <= m; ++k) {
    LD inner = 0.0L;
    for (int j = 0; j <= k; ++j) {
      LD term = to_long_double(binomial(static_cast<unsigned long>(k),
                                        static_cast<unsigned long>(j))) *
                std::pow(c, static_cast<LD>(k - j)) *
                static_cast<LD>(delta_cos_pow_deriv(m, j, x));
      if (j % 2 == 1) term = -term;
      inner += term;
    }
    acc += sec_pow * inner;
    sec_pow *= secv;
  }
  return static_cast<double>(acc);
}

GfReport gf_check_pi(int n_max) {
  if (n_max < 0) return {};
  const auto tan_c = rational_series(FnId::tan, n_max);
  SeriesInT<Poly> num(n_max, Poly());
  num.set_coeff(0, Poly::variable());
  for (int k = 1; k <= n_max; ++k) num.set_coeff(k, Poly(tan_c[static_cast<size_t>(k)]));
  const auto gf = num * one_minus_xi_tan(tan_c, n_max).recip_unit(Poly::one());
  return compare_series_with_family(gf, n_max, &pi_poly, "Pi");
}

GfReport gf_check_q(int n_max) {
  if (n_max < 0) return {};
  const auto tan_c = rational_series(FnId::tan, n_max);
  const auto sec_c = rational_series(FnId::sec, n_max);
  const auto gf = const_series(sec_c, n_max) *
                  one_minus_xi_tan(tan_c, n_max).recip_unit(Poly::one());
  return compare_series_with_family(gf, n_max, &q_poly, "Q");
}

GfReport gf_check_lambda(int m_max, int j) {
  GfReport report;
  if (m_max < 0) return report;
  require_nonneg(j, "gf_check_lambda");
  const auto tan_c = rational_series(FnId::tan, m_max);
  const auto cos_c = rational_series(FnId::cos, m_max);
  // carrier generating function: (1 - xi tan t)^j cos^j t
  const auto gf = one_minus_xi_tan(tan_c, m_max).pow(j, Poly::one()) *
                  const_series(cos_c, m_max).pow(j, Poly::one());
  BigInt mfact(1);
  for (int m = 0; m <= m_max; ++m) {
    if (m > 0) mfact *= m;
    const Poly got = Rational(mfact) * gf.coeff(m);
    const Poly want = lambda_carrier(m, j);
    if (got != want) {
      std::ostringstream os;
      os << "Lambda carrier (j=" << j << ") order " << m
         << ": generating function gives " << got << ", recurrence gives " << want;
      report.mismatches.push_back({m, os.str()});
    }
    ++report.orders_checked;
  }
  return report;
}

GfReport gf_check_delta(int m_max, int j) {
  GfReport report;
  if (m_max < 0) return report;
  require_nonneg(j, "gf_check_delta");
  const auto sin_c = rational_series(FnId::sin, m_max);
  const auto cos_c = rational_series(FnId::cos, m_max);
  const ExtElem zero = ExtElem::zero(Sigma::one_minus_xi2);
  // xi cos t - s sin t over the s^2 = 1 - xi^2 ring
  SeriesInT<ExtElem> base(m_max, zero);
  for (int k = 0; k <= m_max; ++k)
    base.set_coeff(k, ExtElem(Poly::monomial(1, cos_c[static_cast<size_t>(k)]),
                              Poly(-sin_c[static_cast<size_t>(k)]),
                              Sigma::one_minus_xi2));
  const auto gf = base.pow(j, ExtElem::one(Sigma::one_minus_xi2));
  BigInt mfact(1);
  for (int m = 0; m <= m_max; ++m) {
    if (m > 0) mfact *= m;
    const ExtElem got = Rational(mfact) * gf.coeff(m);
    const ExtElem want = delta_elem(m, j);
    if (got != want) {
      std::ostringstream os;
      os << "Delta (j=" << j << ") order " << m << ": generating function gives " << got
         << ", operator route gives " << want;
      report.mismatches.push_back({m, os.str()});
    }
    ++report.orders_checked;
  }
  return report;
}

LieFlowReport lie_flow_check(double t, double xi, FlowFn f, int terms) {
  const LD lt = static_cast<LD>(t);
  const LD lxi = static_cast<LD>(xi);
  const LD den = std::cos(lt) - lxi * std::sin(lt);
  if (std::fabs(den) < static_cast<LD>(kSingularTol))
    throw SingularityError("lie_flow_check: flow map pole (cos t - xi sin t ~ 0)");
  const LD eta = (lxi * std::cos(lt) + std::sin(lt)) / den;

  LD closed = 0.0L, series = 0.0L, last = 0.0L;
  LD t_pow = 1.0L, fact = 1.0L;
  switch (f) {
    case FlowFn::identity:
      closed = eta;
      for (int n = 0; n <= terms; ++n) {
        if (n > 0) {
          t_pow *= lt;
          fact *= static_cast<LD>(n);
        }
        last = t_pow / fact * pi_poly(n).eval<LD>(lxi);
        series += last;
      }
      break;
    case FlowFn::sqrt_one_plus_sq: {
      closed = std::sqrt(1.0L + eta * eta);
      const LD root = std::sqrt(1.0L + lxi * lxi);
      for (int n = 0; n <= terms; ++n) {
        if (n > 0) {
          t_pow *= lt;
          fact *= static_cast<LD>(n);
        }
        last = t_pow / fact * q_poly(n).eval<LD>(lxi) * root;
        series += last;
      }
      break;
    }
  }

  LieFlowReport r;
  r.series_value = static_cast<double>(series);
  r.closed_value = static_cast<double>(closed);
  r.abs_error = static_cast<double>(std::fabs(series - closed));
  r.last_term = static_cast<double>(std::fabs(last));
  r.converged = std::fabs(last) <= 1e-13L * std::max(1.0L, std::fabs(series));
  return r;
}

}  // namespace derivkit
