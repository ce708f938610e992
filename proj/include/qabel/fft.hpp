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

// Fast 1-D transforms on contiguous buffers:
//
//   X_l = sum_k x_k exp(sign * 2 pi i k l / n)      (unnormalized)
//
// Power-of-two lengths use an iterative radix-2 kernel; every other length
// goes through Bluestein's chirp reindexing onto a power-of-two convolution.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "qabel/common.hpp"

namespace qabel::fft {

/// exp(sign * 2 pi i m / n), argument reduced to at most half a turn.
template <typename Real>
std::complex<Real> twiddle(std::int64_t m, std::int64_t n, int sign) {
  m %= n;
  if (m < 0) m += n;
  const Real turns = (2 * m > n) ? -static_cast<Real>(n - m) / static_cast<Real>(n)
                                 : static_cast<Real>(m) / static_cast<Real>(n);
  const Real angle = static_cast<Real>(sign) * 2 * std::numbers::pi_v<Real> * turns;
  return {std::cos(angle), std::sin(angle)};
}

template <typename Real>
class Radix2Plan {
 public:
  Radix2Plan(std::int64_t n, int sign) : n_(n) {
    if (n < 1 || !std::has_single_bit(static_cast<std::uint64_t>(n))) {
      throw std::invalid_argument("radix-2 plan needs a power-of-two length");
    }
    roots_.resize(static_cast<std::size_t>(n / 2));
    for (std::int64_t k = 0; k < n / 2; ++k) roots_[static_cast<std::size_t>(k)] = twiddle<Real>(k, n, sign);
  }

  std::int64_t size() const { return n_; }

  void operator()(std::span<std::complex<Real>> a) const {
    const auto n = static_cast<std::size_t>(n_);
    for (std::size_t i = 1, j = 0; i < n; ++i) {
      std::size_t bit = n >> 1;
      for (; j & bit; bit >>= 1) j ^= bit;
      j ^= bit;
      if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
      const std::size_t half = len / 2;
      const std::size_t step = n / len;
      for (std::size_t start = 0; start < n; start += len) {
        for (std::size_t k = 0; k < half; ++k) {
          const auto t = roots_[k * step] * a[start + k + half];
          a[start + k + half] = a[start + k] - t;
          a[start + k] += t;
        }
      }
    }
  }

 private:
  std::int64_t n_;
  std::vector<std::complex<Real>> roots_;
};

template <typename Real>
class BluesteinPlan {
 public:
  BluesteinPlan(std::int64_t n, int sign)
      : n_(n),
        m_(static_cast<std::int64_t>(std::bit_ceil(static_cast<std::uint64_t>(2 * n - 1)))),
        forward_(m_, +1),
        backward_(m_, -1) {
    chirp_.resize(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) {
      // exp(sign * i pi k^2 / n) = twiddle(k^2 mod 2n, 2n)
      const auto k2 = mulmod(k, k, 2 * n);
      chirp_[static_cast<std::size_t>(k)] = twiddle<Real>(k2, 2 * n, sign);
    }
    kernel_.assign(static_cast<std::size_t>(m_), {0, 0});
    kernel_[0] = std::conj(chirp_[0]);
    for (std::int64_t k = 1; k < n; ++k) {
      kernel_[static_cast<std::size_t>(k)] = std::conj(chirp_[static_cast<std::size_t>(k)]);
      kernel_[static_cast<std::size_t>(m_ - k)] = std::conj(chirp_[static_cast<std::size_t>(k)]);
    }
    forward_(kernel_);
    scratch_.resize(static_cast<std::size_t>(m_));
  }

  std::int64_t size() const { return n_; }

  void operator()(std::span<std::complex<Real>> a) {
    const auto n = static_cast<std::size_t>(n_);
    std::fill(scratch_.begin(), scratch_.end(), std::complex<Real>{0, 0});
    for (std::size_t k = 0; k < n; ++k) scratch_[k] = a[k] * chirp_[k];
    forward_(scratch_);
    for (std::size_t k = 0; k < scratch_.size(); ++k) scratch_[k] *= kernel_[k];
    backward_(scratch_);
    const Real inv_m = Real{1} / static_cast<Real>(m_);
    for (std::size_t l = 0; l < n; ++l) a[l] = scratch_[l] * chirp_[l] * inv_m;
  }

 private:
  std::int64_t n_;
  std::int64_t m_;
  Radix2Plan<Real> forward_;
  Radix2Plan<Real> backward_;
  std::vector<std::complex<Real>> chirp_;
  std::vector<std::complex<Real>> kernel_;
  std::vector<std::complex<Real>> scratch_;
};

/// Length-n transform that picks radix-2 or Bluestein once at construction.
template <typename Real>
class CyclicPlan {
 public:
  CyclicPlan(std::int64_t n, int sign) : n_(n) {
    if (n < 1) throw std::invalid_argument("transform length must be positive");
    if (std::has_single_bit(static_cast<std::uint64_t>(n))) {
      radix2_.emplace_back(n, sign);
    } else {
      bluestein_.emplace_back(n, sign);
    }
  }

  std::int64_t size() const { return n_; }

  void operator()(std::span<std::complex<Real>> a) {
    if (!radix2_.empty()) {
      radix2_.front()(a);
    } else {
      bluestein_.front()(a);
    }
  }

 private:
  std::int64_t n_;
  std::vector<Radix2Plan<Real>> radix2_;
  std::vector<BluesteinPlan<Real>> bluestein_;
};

/// Walsh-Hadamard butterflies on a strided line of length n (a power of two),
/// unnormalized.
template <typename Complex>
void walsh_hadamard_strided(Complex* base, std::int64_t n, std::int64_t stride) {
  for (std::int64_t h = 1; h < n; h <<= 1) {
    for (std::int64_t i = 0; i < n; i += 2 * h) {
      for (std::int64_t j = i; j < i + h; ++j) {
        auto& a = base[j * stride];
        auto& b = base[(j + h) * stride];
        const auto sum = a + b;
        b = a - b;
        a = sum;
      }
    }
  }
}

}  // namespace qabel::fft
