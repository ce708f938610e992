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

#include "qabel/state.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qabel {

std::uint64_t limits::max_amplitudes() {
  if (const char* env = std::getenv("QSIM_MAX_AMPLITUDES")) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0 || *env == '-') {
      throw std::invalid_argument(std::string("QSIM_MAX_AMPLITUDES must be a positive integer, got '") + env +
                                  "'");
    }
    return value;
  }
  return kDefaultMaxAmplitudes;
}

RegisterLayout::RegisterLayout(std::vector<std::int64_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("layout needs at least one register");
  const auto cap = limits::max_amplitudes();
  for (const auto d : dims_) {
    if (d < 2) throw std::invalid_argument("register dimension " + std::to_string(d) + " is below 2");
    if (static_cast<std::uint64_t>(size_) > cap / static_cast<std::uint64_t>(d)) {
      throw std::invalid_argument("layout exceeds the amplitude cap of " + std::to_string(cap));
    }
    size_ *= d;
  }
  strides_.assign(dims_.size(), 1);
  for (std::size_t r = dims_.size(); r-- > 1;) strides_[r - 1] = strides_[r] * dims_[r];
}

std::int64_t RegisterLayout::index_of(std::span<const std::int64_t> labels) const {
  if (labels.size() != dims_.size()) {
    throw std::invalid_argument("expected " + std::to_string(dims_.size()) + " register labels");
  }
  std::int64_t index = 0;
  for (std::size_t r = 0; r < dims_.size(); ++r) {
    if (labels[r] < 0 || labels[r] >= dims_[r]) {
      throw std::invalid_argument("label " + std::to_string(labels[r]) + " out of range for register " +
                                  std::to_string(r) + " of dimension " + std::to_string(dims_[r]));
    }
    index = index * dims_[r] + labels[r];
  }
  return index;
}

void RegisterLayout::check_register(RegisterId r) const {
  if (r.index >= dims_.size()) {
    throw std::invalid_argument("register " + std::to_string(r.index) + " does not exist");
  }
}

StateVector::StateVector(RegisterLayout layout, Amplitudes amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != layout_.size()) {
    throw std::invalid_argument("amplitude count does not match the register layout");
  }
  if (std::abs(amplitudes_.squaredNorm() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state is not normalized");
  }
}

StateVector normalized_state(RegisterLayout layout, Amplitudes amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw std::invalid_argument("cannot normalize the zero vector");
  amplitudes /= norm;
  return StateVector(std::move(layout), std::move(amplitudes));
}

StateVector init_basis(const RegisterLayout& layout, std::span<const std::int64_t> labels) {
  Amplitudes amps = Amplitudes::Zero(layout.size());
  amps[layout.index_of(labels)] = 1.0;
  return StateVector(layout, std::move(amps));
}

StateVector apply_register_matrix(StateVector state, RegisterId r, const Eigen::MatrixXcd& matrix) {
  const auto& layout = state.layout();
  layout.check_register(r);
  const auto d = layout.dim(r);
  if (matrix.rows() != d || matrix.cols() != d) {
    throw std::invalid_argument("matrix size does not match register dimension");
  }
  auto& amps = state.mutable_amplitudes();
  Amplitudes line(d);
  for_each_register_line(layout, r, [&](std::int64_t base, std::int64_t s) {
    for (std::int64_t k = 0; k < d; ++k) line[k] = amps[base + k * s];
    const Amplitudes mapped = matrix * line;
    for (std::int64_t k = 0; k < d; ++k) amps[base + k * s] = mapped[k];
  });
  return state;
}

StateVector apply_register_permutation(StateVector state, RegisterId r,
                                       std::span<const std::int64_t> perm) {
  const auto& layout = state.layout();
  layout.check_register(r);
  const auto d = layout.dim(r);
  if (static_cast<std::int64_t>(perm.size()) != d) {
    throw std::invalid_argument("permutation size does not match register dimension");
  }
  std::vector<char> hit(static_cast<std::size_t>(d), 0);
  for (const auto p : perm) {
    if (p < 0 || p >= d || hit[static_cast<std::size_t>(p)]) {
      throw std::invalid_argument("register map is not a permutation");
    }
    hit[static_cast<std::size_t>(p)] = 1;
  }
  const auto& in = state.amplitudes();
  Amplitudes out(in.size());
  for_each_register_line(layout, r, [&](std::int64_t base, std::int64_t s) {
    for (std::int64_t k = 0; k < d; ++k) out[base + perm[static_cast<std::size_t>(k)] * s] = in[base + k * s];
  });
  state.mutable_amplitudes() = std::move(out);
  return state;
}

namespace {

void check_oracle_registers(const RegisterLayout& layout, const TruthTable& f, RegisterId in,
                            RegisterId out) {
  layout.check_register(in);
  layout.check_register(out);
  if (in == out) throw std::invalid_argument("oracle input and output registers must differ");
  if (static_cast<std::uint64_t>(layout.dim(in)) != f.group().order()) {
    throw std::invalid_argument("input register dimension " + std::to_string(layout.dim(in)) +
                                " does not match the truth table's group order " +
                                std::to_string(f.group().order()));
  }
  if (f.value_bound() > static_cast<std::uint64_t>(layout.dim(out))) {
    throw std::invalid_argument("truth table values do not fit the output register");
  }
}

template <typename Map>
StateVector permute_output(StateVector state, const TruthTable& f, RegisterId in, RegisterId out,
                           Map&& map) {
  const auto& layout = state.layout();
  const auto s_out = layout.stride(out);
  const auto& src = state.amplitudes();
  Amplitudes dst(src.size());
  for (std::int64_t i = 0; i < layout.size(); ++i) {
    const auto x = layout.label(i, in);
    const auto y = layout.label(i, out);
    const auto y2 = map(y, static_cast<std::int64_t>(f.at(static_cast<std::uint64_t>(x))));
    dst[i + (y2 - y) * s_out] = src[i];
  }
  state.mutable_amplitudes() = std::move(dst);
  return state;
}

}  // namespace

StateVector apply_oracle_xor(StateVector state, const TruthTable& f, RegisterId in, RegisterId out) {
  check_oracle_registers(state.layout(), f, in, out);
  if (!f.group().is_boolean()) throw std::invalid_argument("XOR oracle needs a function on B^n");
  if (!std::has_single_bit(static_cast<std::uint64_t>(state.layout().dim(out)))) {
    throw std::invalid_argument("XOR oracle output register must hold whole qubits");
  }
  return permute_output(std::move(state), f, in, out,
                        [](std::int64_t y, std::int64_t v) { return y ^ v; });
}

StateVector apply_oracle_modadd(StateVector state, const TruthTable& f, RegisterId in,
                                RegisterId out) {
  check_oracle_registers(state.layout(), f, in, out);
  const auto n = state.layout().dim(out);
  return permute_output(std::move(state), f, in, out,
                        [n](std::int64_t y, std::int64_t v) { return (y + v) % n; });
}

StateVector apply_oracle_modsub(StateVector state, const TruthTable& f, RegisterId in,
                                RegisterId out) {
  check_oracle_registers(state.layout(), f, in, out);
  const auto n = state.layout().dim(out);
  return permute_output(std::move(state), f, in, out,
                        [n](std::int64_t y, std::int64_t v) { return ((y - v) % n + n) % n; });
}

Eigen::VectorXd probabilities(const StateVector& state, RegisterId r) {
  const RegisterId regs[] = {r};
  return joint_probabilities(state, regs);
}

Eigen::VectorXd joint_probabilities(const StateVector& state, std::span<const RegisterId> regs) {
  const auto& layout = state.layout();
  std::int64_t joint = 1;
  for (const auto r : regs) {
    layout.check_register(r);
    joint *= layout.dim(r);
  }
  Eigen::VectorXd probs = Eigen::VectorXd::Zero(joint);
  const auto& amps = state.amplitudes();
  for (std::int64_t i = 0; i < layout.size(); ++i) {
    std::int64_t key = 0;
    for (const auto r : regs) key = key * layout.dim(r) + layout.label(i, r);
    probs[key] += std::norm(amps[i]);
  }
  return probs;
}

StateVector collapse_register(StateVector state, RegisterId r, std::int64_t value) {
  const auto& layout = state.layout();
  layout.check_register(r);
  if (value < 0 || value >= layout.dim(r)) throw std::invalid_argument("collapse label out of range");
  auto& amps = state.mutable_amplitudes();
  for (std::int64_t i = 0; i < layout.size(); ++i) {
    if (layout.label(i, r) != value) amps[i] = 0.0;
  }
  const double norm = amps.norm();
  if (!(norm > 1e-150)) {
    throw std::logic_error("measurement conditioned on a zero-probability outcome");
  }
  amps /= norm;
  return state;
}

Measured measure_register(StateVector state, RegisterId r, Rng& rng) {
  const auto probs = probabilities(state, r);
  const double total = probs.sum();
  const double u = uniform01(rng) * total;
  double acc = 0.0;
  std::int64_t chosen = -1;
  for (std::int64_t v = 0; v < probs.size(); ++v) {
    if (probs[v] <= 0.0) continue;
    acc += probs[v];
    chosen = v;
    if (acc > u) break;
  }
  if (chosen < 0) throw std::logic_error("measurement of a zero-norm state");
  MeasurementOutcome outcome{r, chosen, probs[chosen] / total};
  return Measured{outcome, collapse_register(std::move(state), r, chosen)};
}

std::string dump_state(const StateVector& state, double threshold) {
  std::string out;
  char buf[96];
  const auto& amps = state.amplitudes();
  for (std::int64_t i = 0; i < amps.size(); ++i) {
    if (std::abs(amps[i]) <= threshold) continue;
    std::snprintf(buf, sizeof buf, "%lld %.17g %.17g\n", static_cast<long long>(i), amps[i].real(),
                  amps[i].imag());
    out += buf;
  }
  return out;
}

}  // namespace qabel
