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
#include <string>

#include "qabel/group.hpp"
#include "qabel/state.hpp"

namespace qabel {

/// [FT]_{ij} = chi_i(g_j) / sqrt|G| in the group's element order.
struct FourierMatrix {
  GroupSpec group;
  Eigen::MatrixXcd entries;
};

enum class FtDirection {
  /// Rows of FT: sum_j chi_i(g_j) a_j / sqrt|G|. Sends |chi_i> to |g_i>.
  kForward,
  /// The conjugate transpose.
  kInverse,
};

/// Dense matrix; the group order must not exceed limits::kDenseMaxOrder.
FourierMatrix ft_matrix(const GroupSpec& g);

/// Largest entrywise deviation of F^dagger F from the identity.
double unitarity_defect(const Eigen::MatrixXcd& m);

/// Fourier transform of register r over G, by the factored fast path: one
/// 1-D transform along each cyclic factor (radix-2 or Bluestein).
StateVector apply_ft(const GroupSpec& g, StateVector state, RegisterId r,
                     FtDirection dir = FtDirection::kForward);

/// Same map by dense matrix multiplication; the reference for apply_ft.
StateVector apply_ft_dense(const GroupSpec& g, StateVector state, RegisterId r,
                           FtDirection dir = FtDirection::kForward);

/// H on every qubit of a power-of-two register. Self-inverse.
StateVector hadamard_n(StateVector state, RegisterId r);

/// DFT_q: |k> -> q^{-1/2} sum_l exp(2 pi i k l / q) |l>, q the register dimension.
StateVector dft_q(StateVector state, RegisterId r);
StateVector inverse_dft_q(StateVector state, RegisterId r);

/// |g> -> |h g> on register r.
StateVector shift_operator(const GroupSpec& g, const GroupElement& h, StateVector state,
                           RegisterId r);

/// |chi_i> = |G|^{-1/2} sum_g conj(chi_i(g)) |g>, as a single-register state.
StateVector fourier_basis_state(const GroupSpec& g, const CharacterIndex& i);

/// Row-major text, one row per line, entries `re,im` separated by spaces.
std::string format_matrix(const Eigen::MatrixXcd& m);

}  // namespace qabel
