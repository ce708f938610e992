// Copyright 2026 The qabel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qabel/numtheory.hpp"

#include <stdexcept>
#include <string>

namespace qabel {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw std::invalid_argument("gcd: arguments must be nonnegative");
  if (a == 0 && b == 0) throw std::invalid_argument("gcd(0, 0) is undefined");
  while (b != 0) {
    const auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("64-bit multiplication overflow");
  return out;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd(a, b), b);
}

std::int64_t modpow(std::int64_t y, std::int64_t e, std::int64_t n) {
  if (n < 2) throw std::invalid_argument("modpow: modulus must be at least 2");
  if (e < 0) throw std::invalid_argument("modpow: negative exponent");
  std::int64_t base = ((y % n) + n) % n;
  std::int64_t result = 1;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, n);
    base = mulmod(base, base, n);
    e >>= 1;
  }
  return result;
}

std::int64_t order_bruteforce(std::int64_t y, std::int64_t n) {
  if (n < 2) throw std::invalid_argument("order: modulus must be at least 2");
  y = ((y % n) + n) % n;
  if (gcd(y, n) != 1) {
    throw std::invalid_argument(std::to_string(y) + " is not coprime to " + std::to_string(n));
  }
  std::int64_t power = y % n;
  std::int64_t r = 1;
  while (power != 1 % n) {
    power = mulmod(power, y, n);
    ++r;
  }
  return r;
}

std::vector<std::int64_t> prime_factors(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

std::int64_t reduce_to_order(std::int64_t y, std::int64_t m, std::int64_t n) {
  if (m < 1 || modpow(y, m, n) != 1) {
    throw std::invalid_argument("reduce_to_order: y^m is not 1 mod N");
  }
  for (const auto p : prime_factors(m)) {
    while (m % p == 0 && modpow(y, m / p, n) == 1) m /= p;
  }
  return m;
}

std::vector<Convergent> convergents(std::int64_t c, std::int64_t q) {
  if (q < 1 || c < 0) throw std::invalid_argument("convergents: need c >= 0, q >= 1");
  std::vector<Convergent> out;
  // h_{-1}/k_{-1} = 1/0, h_{-2}/k_{-2} = 0/1
  std::int64_t h_prev = 1, k_prev = 0, h_prev2 = 0, k_prev2 = 1;
  std::int64_t num = c, den = q;
  while (den != 0) {
    const auto a = num / den;
    const auto h = a * h_prev + h_prev2;
    const auto k = a * k_prev + k_prev2;
    out.push_back({h, k});
    h_prev2 = h_prev;
    k_prev2 = k_prev;
    h_prev = h;
    k_prev = k;
    const auto rem = num % den;
    num = den;
    den = rem;
  }
  return out;
}

Convergent best_rational(std::int64_t c, std::int64_t q, std::int64_t bound) {
  if (q < 1 || c < 0 || c >= q) throw std::invalid_argument("best_rational: need 0 <= c < q");
  if (bound < 1) throw std::invalid_argument("best_rational: bound must be positive");
  Convergent best{0, 1};
  for (const auto& cv : convergents(c, q)) {
    if (cv.r > bound) break;
    best = cv;
  }
  return best;
}

}  // namespace qabel
