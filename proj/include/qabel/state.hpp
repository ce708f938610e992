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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qabel/common.hpp"
#include "qabel/group.hpp"

namespace qabel {

using Complex = std::complex<double>;
using Amplitudes = Eigen::VectorXcd;

struct RegisterId {
  std::size_t index = 0;
  friend bool operator==(RegisterId, RegisterId) = default;
};

/// Dimensions of a tuple of registers. The basis index is mixed-radix with
/// register 0 most significant, matching GroupSpec's element order.
class RegisterLayout {
 public:
  explicit RegisterLayout(std::vector<std::int64_t> dims);
  RegisterLayout(std::initializer_list<std::int64_t> dims)
      : RegisterLayout(std::vector<std::int64_t>(dims)) {}

  const std::vector<std::int64_t>& dims() const { return dims_; }
  std::size_t num_registers() const { return dims_.size(); }
  std::int64_t dim(RegisterId r) const { return dims_.at(r.index); }
  /// Index distance between consecutive labels of register r.
  std::int64_t stride(RegisterId r) const { return strides_.at(r.index); }
  std::int64_t size() const { return size_; }

  std::int64_t label(std::int64_t index, RegisterId r) const {
    return (index / stride(r)) % dim(r);
  }
  std::int64_t index_of(std::span<const std::int64_t> labels) const;
  void check_register(RegisterId r) const;

  friend bool operator==(const RegisterLayout& a, const RegisterLayout& b) {
    return a.dims_ == b.dims_;
  }

 private:
  std::vector<std::int64_t> dims_;
  std::vector<std::int64_t> strides_;
  std::int64_t size_ = 1;
};

/// A unit-norm vector of amplitudes over a RegisterLayout.
class StateVector {
 public:
  /// Takes the amplitudes as given; the norm must already be 1 within 1e-9.
  StateVector(RegisterLayout layout, Amplitudes amplitudes);

  const RegisterLayout& layout() const { return layout_; }
  const Amplitudes& amplitudes() const { return amplitudes_; }
  /// Raw access for kernels that preserve the norm.
  Amplitudes& mutable_amplitudes() { return amplitudes_; }

  Complex amplitude(std::span<const std::int64_t> labels) const {
    return amplitudes_[layout_.index_of(labels)];
  }
  Complex amplitude(std::initializer_list<std::int64_t> labels) const {
    return amplitude(std::span<const std::int64_t>(labels.begin(), labels.size()));
  }
  double norm_squared() const { return amplitudes_.squaredNorm(); }

 private:
  RegisterLayout layout_;
  Amplitudes amplitudes_;
};

inline constexpr double kNormTolerance = 1e-9;

/// Rescales arbitrary nonzero amplitudes to unit norm.
StateVector normalized_state(RegisterLayout layout, Amplitudes amplitudes);

StateVector init_basis(const RegisterLayout& layout, std::span<const std::int64_t> labels);
inline StateVector init_basis(const RegisterLayout& layout,
                              std::initializer_list<std::int64_t> labels) {
  return init_basis(layout, std::span<const std::int64_t>(labels.begin(), labels.size()));
}

/// Applies a dense d x d matrix to register r (d = its dimension).
StateVector apply_register_matrix(StateVector state, RegisterId r,
                                  const Eigen::MatrixXcd& matrix);

/// Permutes register r's labels: |x> -> |perm[x]>. `perm` must be a bijection.
StateVector apply_register_permutation(StateVector state, RegisterId r,
                                       std::span<const std::int64_t> perm);

/// |x>|y> -> |x>|y XOR f(x)> with x the in-register label (a B^n element
/// index) and y the out-register label.
StateVector apply_oracle_xor(StateVector state, const TruthTable& f, RegisterId in,
                             RegisterId out);

/// |x1>|x2> -> |x1>|x2 + f(x1) mod N>, N the out-register dimension.
StateVector apply_oracle_modadd(StateVector state, const TruthTable& f, RegisterId in,
                                RegisterId out);

/// Inverse of apply_oracle_modadd.
StateVector apply_oracle_modsub(StateVector state, const TruthTable& f, RegisterId in,
                                RegisterId out);

/// Marginal Born distribution of one register.
Eigen::VectorXd probabilities(const StateVector& state, RegisterId r);

/// Joint Born distribution of several registers, flattened mixed-radix with
/// regs[0] most significant.
Eigen::VectorXd joint_probabilities(const StateVector& state,
                                    std::span<const RegisterId> regs);

struct MeasurementOutcome {
  RegisterId reg;
  std::int64_t value = 0;
  double probability = 0.0;
};

struct Measured {
  MeasurementOutcome outcome;
  StateVector state;
};

/// Samples one register and returns the collapsed, renormalized state.
Measured measure_register(StateVector state, RegisterId r, Rng& rng);

/// Projects register r onto `value` and renormalizes.
StateVector collapse_register(StateVector state, RegisterId r, std::int64_t value);

/// `index re im` per line, amplitudes with modulus above `threshold` only.
std::string dump_state(const StateVector& state, double threshold = 1e-12);

/// Visits every line of register r: `fn(base, stride)` where the line's
/// amplitudes sit at base + k * stride for k in [0, dim).
template <typename Fn>
void for_each_register_line(const RegisterLayout& layout, RegisterId r, Fn&& fn) {
  const auto d = layout.dim(r);
  const auto s = layout.stride(r);
  const auto block = d * s;
  for (std::int64_t outer = 0; outer < layout.size(); outer += block) {
    for (std::int64_t inner = 0; inner < s; ++inner) fn(outer + inner, s);
  }
}

}  // namespace qabel
