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

#include <gtest/gtest.h>

#include <algorithm>

#include "qabel/gf2.hpp"
#include "qabel/numtheory.hpp"

namespace qabel {
namespace {

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd(15, 6), 3);
  EXPECT_EQ(gcd(9, 0), 9);
  EXPECT_EQ(gcd(0, 9), 9);
  EXPECT_EQ(gcd(7, 15), 1);
  EXPECT_THROW(gcd(0, 0), std::invalid_argument);
  EXPECT_THROW(gcd(-4, 2), std::invalid_argument);
}

TEST(Lcm, OverflowIsDetected) {
  EXPECT_EQ(lcm(4, 6), 12);
  EXPECT_THROW(lcm(std::int64_t{1} << 40, (std::int64_t{1} << 40) - 1), std::overflow_error);
  EXPECT_THROW(checked_mul(std::int64_t{1} << 32, std::int64_t{1} << 31), std::overflow_error);
}

TEST(Modpow, Examples) {
  EXPECT_EQ(modpow(7, 4, 15), 1);
  EXPECT_EQ(modpow(11, 0, 21), 1);
  EXPECT_EQ(modpow(2, 6, 21), 1);
  EXPECT_THROW(modpow(2, 3, 1), std::invalid_argument);
  EXPECT_THROW(modpow(2, -1, 5), std::invalid_argument);
}

TEST(Modpow, AgreesWithRepeatedMultiplication) {
  for (std::int64_t n = 2; n <= 200; ++n) {
    for (std::int64_t y = 0; y < n; y += 1 + n / 20) {
      std::int64_t naive = 1 % n;
      for (std::int64_t e = 0; e <= 64; ++e) {
        ASSERT_EQ(modpow(y, e, n), naive) << y << "^" << e << " mod " << n;
        naive = naive * y % n;
      }
    }
  }
}

TEST(Modpow, LargeModulusDoesNotOverflow) {
  const std::int64_t p = 4611686018427387847;  // below 2^62
  EXPECT_EQ(modpow(p - 1, 2, p), 1);
}

TEST(OrderBruteforce, Examples) {
  EXPECT_EQ(order_bruteforce(7, 15), 4);
  EXPECT_EQ(order_bruteforce(1, 15), 1);
  EXPECT_EQ(order_bruteforce(2, 21), 6);
  EXPECT_EQ(order_bruteforce(5, 33), 10);
  EXPECT_THROW(order_bruteforce(3, 15), std::invalid_argument);
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t k = 1; k < n; ++k) count += gcd(k, n) == 1;
  return count;
}

TEST(OrderBruteforce, IsLeastAndDividesGroupOrder) {
  for (std::int64_t n : {15, 21, 33, 35, 91, 97}) {
    const auto phi = euler_phi(n);
    for (std::int64_t y = 1; y < n; ++y) {
      if (gcd(y, n) != 1) continue;
      const auto r = order_bruteforce(y, n);
      EXPECT_EQ(phi % r, 0);
      EXPECT_EQ(modpow(y, r, n), 1);
      for (std::int64_t d = 1; d < r; ++d) {
        if (r % d == 0) EXPECT_NE(modpow(y, d, n), 1);
      }
      EXPECT_EQ(reduce_to_order(y, phi, n), r);
      EXPECT_EQ(reduce_to_order(y, 4 * r, n), r);
    }
  }
  EXPECT_THROW(reduce_to_order(2, 5, 21), std::invalid_argument);
}

TEST(PrimeFactors, Distinct) {
  EXPECT_EQ(prime_factors(360), (std::vector<std::int64_t>{2, 3, 5}));
  EXPECT_EQ(prime_factors(97), (std::vector<std::int64_t>{97}));
  EXPECT_TRUE(prime_factors(1).empty());
}

TEST(Convergents, ExpansionOf85Over256) {
  const auto cs = convergents(85, 256);
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_EQ(cs[0], (Convergent{0, 1}));
  EXPECT_EQ(cs[1], (Convergent{1, 3}));
  EXPECT_EQ(cs[2], (Convergent{85, 256}));
}

TEST(BestRational, Examples) {
  EXPECT_EQ(best_rational(4, 16, 15), (Convergent{1, 4}));
  EXPECT_EQ(best_rational(85, 256, 20), (Convergent{1, 3}));
  EXPECT_EQ(best_rational(0, 64, 9), (Convergent{0, 1}));
  EXPECT_EQ(best_rational(0, 5, 1), (Convergent{0, 1}));
  EXPECT_THROW(best_rational(16, 16, 4), std::invalid_argument);
  EXPECT_THROW(best_rational(1, 16, 0), std::invalid_argument);
}

TEST(BestRational, ExactMultiplesRecoverReducedFraction) {
  for (std::int64_t r = 1; r <= 16; ++r) {
    const std::int64_t q = 720720;  // lcm(1..16)
    for (std::int64_t k = 0; k < r; ++k) {
      const auto g = gcd(k, r);
      EXPECT_EQ(best_rational(k * q / r, q, 16), (Convergent{k / g, r / g})) << k << "/" << r;
    }
  }
}

TEST(BestRational, WithinHalfOverBoundSquared) {
  // Shor's closeness window: |c/q - k/r| <= 1/(2q) with q >= N^2 pins k/r.
  const std::int64_t n = 21, q = 512;
  for (std::int64_t r = 1; r <= n; ++r) {
    for (std::int64_t k = 0; k < r; ++k) {
      if (gcd(k, r) != 1) continue;
      const auto c = (2 * k * q + r) / (2 * r);  // round(k q / r)
      if (c >= q) continue;
      EXPECT_EQ(best_rational(c, q, n), (Convergent{k, r})) << k << "/" << r;
    }
  }
}

TEST(Bits, ParseAndFormat) {
  EXPECT_EQ(parse_bits("110"), 6u);
  EXPECT_EQ(format_bits(6, 4), "0110");
  EXPECT_THROW(parse_bits("12"), std::invalid_argument);
  EXPECT_THROW(parse_bits(""), std::invalid_argument);
  EXPECT_EQ(dot(parse_bits("101"), parse_bits("111")), 0);
  EXPECT_EQ(dot(parse_bits("100"), parse_bits("111")), 1);
}

TEST(Gf2Nullspace, Examples) {
  GF2Matrix id(3);
  for (BitVec row : {4u, 2u, 1u}) id.add_row(row);
  EXPECT_TRUE(gf2_nullspace(id).empty());

  GF2Matrix m(3);
  m.add_row(parse_bits("011"));
  m.add_row(parse_bits("101"));
  EXPECT_EQ(gf2_nullspace(m), (std::vector<BitVec>{parse_bits("111")}));

  GF2Matrix empty(4);
  const auto basis = gf2_nullspace(empty);
  EXPECT_EQ(basis.size(), 4u);
  GF2Matrix span(4);
  for (auto b : basis) span.add_row(b);
  EXPECT_EQ(span.rank(), 4);
}

TEST(Gf2Nullspace, BasisVectorsAnnihilateEveryRow) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int width = 1 + trial % 12;
    GF2Matrix m(width);
    const int rows = trial % 9;
    for (int i = 0; i < rows; ++i) m.add_row(rng() & ((BitVec{1} << width) - 1));
    const auto basis = gf2_nullspace(m);
    EXPECT_EQ(static_cast<int>(basis.size()), width - m.rank());
    for (auto b : basis) {
      EXPECT_NE(b, 0u);
      for (auto row : m.rows()) EXPECT_EQ(dot(row, b), 0);
    }
    GF2Matrix bm(width);
    for (auto b : basis) bm.add_row(b);
    EXPECT_EQ(bm.rank(), static_cast<int>(basis.size()));
  }
}

TEST(Gf2Echelon, TracksRank) {
  GF2Echelon e(3);
  EXPECT_TRUE(e.insert(parse_bits("011")));
  EXPECT_TRUE(e.insert(parse_bits("101")));
  EXPECT_FALSE(e.insert(parse_bits("110")));
  EXPECT_FALSE(e.insert(0));
  EXPECT_EQ(e.rank(), 2);
  EXPECT_THROW(e.insert(parse_bits("1000")), std::invalid_argument);
  EXPECT_THROW(GF2Matrix(3).add_row(8), std::invalid_argument);
}

}  // namespace
}  // namespace qabel
