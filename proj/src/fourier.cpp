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

#include "qabel/fourier.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "qabel/fft.hpp"

namespace qabel {

namespace {

void check_register_matches(const GroupSpec& g, const StateVector& state, RegisterId r) {
  state.layout().check_register(r);
  if (static_cast<std::uint64_t>(state.layout().dim(r)) != g.order()) {
    throw std::invalid_argument("register dimension " + std::to_string(state.layout().dim(r)) +
                                " does not match group order " + std::to_string(g.order()));
  }
}

}  // namespace

FourierMatrix ft_matrix(const GroupSpec& g) {
  if (g.order() > limits::kDenseMaxOrder) {
    throw std::invalid_argument("group order " + std::to_string(g.order()) +
                                " exceeds the dense Fourier maximum");
  }
  const auto n = static_cast<Eigen::Index>(g.order());
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<GroupElement> elems;
  elems.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) elems.push_back(g.element_at(static_cast<std::uint64_t>(i)));
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const CharacterIndex chi{elems[static_cast<std::size_t>(i)]};
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = character_value(g, chi, elems[static_cast<std::size_t>(j)]) * scale;
    }
  }
  return FourierMatrix{g, std::move(m)};
}

double unitarity_defect(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd gram = m.adjoint() * m;
  return (gram - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

StateVector apply_ft(const GroupSpec& g, StateVector state, RegisterId r, FtDirection dir) {
  check_register_matches(g, state, r);
  if (g.order() > limits::kFastMaxOrder) {
    throw std::invalid_argument("group order exceeds the fast Fourier maximum");
  }
  const int sign = dir == FtDirection::kForward ? +1 : -1;
  const auto& layout = state.layout();
  auto& amps = state.mutable_amplitudes();
  // Factor j of the register sits at stride (register stride) * (product of
  // the later moduli).
  std::int64_t sub_stride = 1;
  for (std::size_t j = g.rank(); j-- > 0;) {
    const auto n = g.moduli()[j];
    const auto stride = layout.stride(r) * sub_stride;
    const auto block = n * stride;
    fft::CyclicPlan<double> plan(n, sign);
    std::vector<Complex> line(static_cast<std::size_t>(n));
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::int64_t outer = 0; outer < layout.size(); outer += block) {
      for (std::int64_t inner = 0; inner < stride; ++inner) {
        const auto base = outer + inner;
        for (std::int64_t k = 0; k < n; ++k) line[static_cast<std::size_t>(k)] = amps[base + k * stride];
        plan(line);
        for (std::int64_t k = 0; k < n; ++k) amps[base + k * stride] = line[static_cast<std::size_t>(k)] * scale;
      }
    }
    sub_stride *= n;
  }
  return state;
}

StateVector apply_ft_dense(const GroupSpec& g, StateVector state, RegisterId r, FtDirection dir) {
  check_register_matches(g, state, r);
  const auto f = ft_matrix(g);
  if (dir == FtDirection::kForward) return apply_register_matrix(std::move(state), r, f.entries);
  return apply_register_matrix(std::move(state), r, f.entries.adjoint());
}

StateVector hadamard_n(StateVector state, RegisterId r) {
  state.layout().check_register(r);
  const auto d = state.layout().dim(r);
  if (!std::has_single_bit(static_cast<std::uint64_t>(d))) {
    throw std::invalid_argument("H_n needs a register of dimension 2^n, got " + std::to_string(d));
  }
  auto& amps = state.mutable_amplitudes();
  for_each_register_line(state.layout(), r, [&](std::int64_t base, std::int64_t s) {
    fft::walsh_hadamard_strided(amps.data() + base, d, s);
  });
  amps *= 1.0 / std::sqrt(static_cast<double>(d));
  return state;
}

StateVector dft_q(StateVector state, RegisterId r) {
  state.layout().check_register(r);
  const auto g = make_group({state.layout().dim(r)}, limits::kFastMaxOrder);
  return apply_ft(g, std::move(state), r, FtDirection::kForward);
}

StateVector inverse_dft_q(StateVector state, RegisterId r) {
  state.layout().check_register(r);
  const auto g = make_group({state.layout().dim(r)}, limits::kFastMaxOrder);
  return apply_ft(g, std::move(state), r, FtDirection::kInverse);
}

StateVector shift_operator(const GroupSpec& g, const GroupElement& h, StateVector state,
                           RegisterId r) {
  check_register_matches(g, state, r);
  g.validate(h);
  std::vector<std::int64_t> perm(g.order());
  for (std::uint64_t i = 0; i < g.order(); ++i) {
    perm[i] = static_cast<std::int64_t>(g.index_of(group_op(g, h, g.element_at(i))));
  }
  return apply_register_permutation(std::move(state), r, perm);
}

StateVector fourier_basis_state(const GroupSpec& g, const CharacterIndex& i) {
  const RegisterLayout layout({static_cast<std::int64_t>(g.order())});
  Amplitudes amps(layout.size());
  const double scale = 1.0 / std::sqrt(static_cast<double>(g.order()));
  for (std::uint64_t idx = 0; idx < g.order(); ++idx) {
    amps[static_cast<Eigen::Index>(idx)] = std::conj(character_value(g, i, g.element_at(idx))) * scale;
  }
  return StateVector(layout, std::move(amps));
}

std::string format_matrix(const Eigen::MatrixXcd& m) {
  std::string out;
  char buf[96];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%s%.17g,%.17g", j ? " " : "", m(i, j).real() + 0.0,
                    m(i, j).imag() + 0.0);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace qabel
