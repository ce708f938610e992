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

#pragma once

#include <cstdint>
#include <vector>

#include "qabel/common.hpp"

namespace qabel {

/// A reduced fraction k/r.
struct Convergent {
  std::int64_t k = 0;
  std::int64_t r = 1;
  friend bool operator==(const Convergent&, const Convergent&) = default;
};

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Throws std::overflow_error when the result does not fit in int64.
std::int64_t lcm(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// y^e mod N by repeated squaring.
std::int64_t modpow(std::int64_t y, std::int64_t e, std::int64_t n);

/// Least r >= 1 with y^r = 1 mod N, by stepping through the powers.
std::int64_t order_bruteforce(std::int64_t y, std::int64_t n);

/// Given any m with y^m = 1 mod N, strips prime factors of m while the
/// identity persists; the result is the exact order of y.
std::int64_t reduce_to_order(std::int64_t y, std::int64_t m, std::int64_t n);

/// Prime factors of m in increasing order, without multiplicity.
std::vector<std::int64_t> prime_factors(std::int64_t m);

/// Continued-fraction convergents of c/q, in order.
std::vector<Convergent> convergents(std::int64_t c, std::int64_t q);

/// The convergent of c/q with the largest denominator not exceeding `bound`.
Convergent best_rational(std::int64_t c, std::int64_t q, std::int64_t bound);

}  // namespace qabel
