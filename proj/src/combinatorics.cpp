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

#include "combinatorics.hpp"

#include <mutex>

namespace derivkit {

namespace {

// Triangle rows, row n holding S2(n,0..n). Guarded by a shared mutex-free
// scheme is not worth it at this scale; a plain mutex keeps it correct.
class StirlingCache {
 public:
  const BigInt& get(unsigned n, unsigned k) {
    std::lock_guard<std::mutex> lock(mu_);
    ensure(n);
    return rows_[n][k];
  }

  std::vector<BigInt> row(unsigned n) {
    std::lock_guard<std::mutex> lock(mu_);
    ensure(n);
    return rows_[n];
  }

 private:
  void ensure(unsigned n) {
    while (rows_.size() <= n) {
      const size_t m = rows_.size();
      const std::vector<BigInt>* prev = rows_.empty() ? nullptr : &rows_.back();
      std::vector<BigInt> r(m + 1);
      r[0] = (m == 0) ? 1 : 0;
      for (size_t k = 1; k <= m; ++k) {
        // S2(m,k) = k S2(m-1,k) + S2(m-1,k-1); the first term drops out at
        // k == m where the previous row has no entry.
        r[k] = (*prev)[k - 1];
        if (k < prev->size()) r[k] += BigInt(static_cast<unsigned long>(k)) * (*prev)[k];
      }
      rows_.push_back(std::move(r));
    }
  }

  std::mutex mu_;
  std::vector<std::vector<BigInt>> rows_;
};

StirlingCache& cache() {
  static StirlingCache c;
  return c;
}

const BigInt kZeroBig(0);

}  // namespace

const BigInt& stirling2(unsigned n, unsigned k) {
  if (k > n) return kZeroBig;
  return cache().get(n, k);
}

BigInt stirling2_sum(unsigned l, unsigned m) {
  BigInt acc(0);
  for (unsigned j = 0; j <= m; ++j) {
    // j^l with the empty-product convention 0^0 = 1
    BigInt p = (j == 0 && l == 0) ? BigInt(1) : int_pow(BigInt(j), l);
    BigInt term = binomial(m, j) * p;
    if ((m - j) % 2 == 1)
      acc -= term;
    else
      acc += term;
  }
  // the alternating sum is always divisible by m!
  return acc / factorial(m);
}

std::vector<BigInt> stirling2_row(unsigned n) { return cache().row(n); }

Poly touchard(unsigned n) {
  std::vector<Rational> coeffs;
  coeffs.reserve(n + 1);
  for (const BigInt& s : stirling2_row(n)) coeffs.emplace_back(s);
  return Poly(std::move(coeffs));
}

std::vector<BigInt> bell_numbers(unsigned n) {
  std::vector<BigInt> b(n + 1);
  b[0] = 1;
  for (unsigned m = 0; m + 1 <= n; ++m) {
    BigInt acc(0);
    for (unsigned k = 0; k <= m; ++k) acc += binomial(m, k) * b[k];
    b[m + 1] = acc;
  }
  return b;
}

}  // namespace derivkit
