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

#include "poly.hpp"

#include <ostream>
#include <sstream>

namespace derivkit {

namespace {
const Rational kZero(0);
}

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::initializer_list<Rational> low_to_high) : c_(low_to_high) {
  trim();
}

Poly::Poly(std::vector<Rational> low_to_high) : c_(std::move(low_to_high)) {
  trim();
}

Poly Poly::variable() { return Poly({Rational(0), Rational(1)}); }

Poly Poly::monomial(int degree, const Rational& c) {
  if (c.is_zero()) return Poly();
  std::vector<Rational> v(static_cast<size_t>(degree) + 1, kZero);
  v.back() = c;
  return Poly(std::move(v));
}

const Rational& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, kZero);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(out));
}

Poly operator*(const Rational& s, const Poly& p) {
  if (s.is_zero()) return Poly();
  Poly r = p;
  for (auto& c : r.c_) c *= s;
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> out(c_.size() - 1, kZero);
  for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = Rational(static_cast<long>(i)) * c_[i];
  return Poly(std::move(out));
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return Poly();
  if (degree() < d.degree()) return std::nullopt;
  std::vector<Rational> rem = c_;
  std::vector<Rational> q(static_cast<size_t>(degree() - d.degree()) + 1, kZero);
  const Rational lead_inv = d.c_.back().inverse();
  for (int k = degree() - d.degree(); k >= 0; --k) {
    Rational f = rem[static_cast<size_t>(k + d.degree())] * lead_inv;
    q[static_cast<size_t>(k)] = f;
    if (f.is_zero()) continue;
    for (size_t j = 0; j < d.c_.size(); ++j)
      rem[static_cast<size_t>(k) + j] -= f * d.c_[j];
  }
  for (const auto& c : rem)
    if (!c.is_zero()) return std::nullopt;
  return Poly(std::move(q));
}

bool Poly::has_parity(int parity) const {
  const int want = ((parity % 2) + 2) % 2;
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero() && static_cast<int>(i % 2) != want) return false;
  return true;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    Rational c = c_[i];
    if (first) {
      if (c.is_negative()) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c.is_negative() ? " - " : " + ");
      c = c.abs();
    }
    if (i == 0 || !c.is_one()) os << c.str();
    if (i > 0) {
      if (!c.is_one()) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << p.str();
}

}  // namespace derivkit
