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
#include <random>
#include <stdexcept>
#include <string>

namespace qabel {

// Precondition or shape violations raise std::invalid_argument. The two
// types below cover the remaining failure modes.

/// A randomized driver ran out of its sample or retry budget. Rerunning with a
/// different seed (or a larger budget) is the expected remedy.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (truth-table files, group strings, bit strings).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace limits {
inline constexpr std::uint64_t kDefaultMaxGroupOrder = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDenseMaxOrder = 4096;
inline constexpr std::uint64_t kFastMaxOrder = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kDefaultMaxAmplitudes = std::uint64_t{1} << 24;

/// Amplitude cap for state vectors; `QSIM_MAX_AMPLITUDES` overrides the default.
std::uint64_t max_amplitudes();
}  // namespace limits

/// The one generator used everywhere. mt19937_64 output is fully specified by
/// the standard, and the helpers below avoid the implementation-defined
/// std::*_distribution types so seeded runs replay across toolchains.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits of one draw.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n) by rejection sampling; n must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % n;
}

inline bool bernoulli(Rng& rng, double p) { return uniform01(rng) < p; }

/// a * b mod m for 0 <= a, b < m, without overflow.
inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  __extension__ using Wide = __int128;
  return static_cast<std::int64_t>((static_cast<Wide>(a) * b) % m);
}

}  // namespace qabel
