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
#include <cmath>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qabel/common.hpp"
#include "qabel/numtheory.hpp"
#include "qabel/state.hpp"

namespace qabel {

/// One eigencomponent of a register state: eigenvalue exp(2 pi i phase).
struct SpectralComponent {
  double phase = 0.0;  // turns, in [0, 1)
  double weight = 0.0;  // |a_lambda|^2
  StateVector state;    // normalized, single register
};

/// Anything that acts on one register of a layout in place.
template <typename U>
concept RegisterUnitary = requires(const U& u, Amplitudes& amps, const RegisterLayout& layout,
                                   RegisterId r, const StateVector& s) {
  { u.apply_inplace(amps, layout, r) } -> std::same_as<void>;
  { u.fixes_zero() } -> std::convertible_to<bool>;
  { u.decompose(s) } -> std::same_as<std::vector<SpectralComponent>>;
};

/// U|m> = |m y mod N>. Labels at or above N (padding up to a qubit register)
/// are left fixed, so U|0> = |0> on any register of dimension >= N.
class MultUnitary {
 public:
  /// Accepts any y coprime to N with 1 <= y < N; powers of a valid base may be 1.
  MultUnitary(std::int64_t y, std::int64_t n);

  std::int64_t y() const { return y_; }
  std::int64_t modulus() const { return n_; }
  std::int64_t map(std::int64_t m) const;

  /// U^{2^j}: multiplication by y^{2^j}, from j repeated squarings of y.
  MultUnitary power_of_two(int j) const;

  std::vector<std::int64_t> permutation(std::int64_t dim) const;
  Eigen::MatrixXcd matrix(std::int64_t dim) const;

  void apply_inplace(Amplitudes& amps, const RegisterLayout& layout, RegisterId r) const;
  StateVector apply(StateVector state, RegisterId r) const;
  bool fixes_zero() const { return true; }
  /// Spectral projection via the cycle structure of the permutation.
  std::vector<SpectralComponent> decompose(const StateVector& x) const;

 private:
  std::int64_t y_;
  std::int64_t n_;
};

/// Validated constructor for the base unitary: 2 <= y < N, gcd(y, N) = 1.
MultUnitary mult_unitary(std::int64_t y, std::int64_t n);

/// A general unitary given as a dense matrix.
class DenseUnitary {
 public:
  explicit DenseUnitary(Eigen::MatrixXcd m, double tol = 1e-10);

  const Eigen::MatrixXcd& matrix() const { return m_; }
  void apply_inplace(Amplitudes& amps, const RegisterLayout& layout, RegisterId r) const;
  bool fixes_zero() const;
  std::vector<SpectralComponent> decompose(const StateVector& x) const;

 private:
  Eigen::MatrixXcd m_;
};

/// U^count by applying U `count` times. The fallback power oracle for a
/// unitary without a cheap U^{2^j}; its cost grows as 2^j.
template <RegisterUnitary U>
class RepeatedUnitary {
 public:
  RepeatedUnitary(U base, std::int64_t count) : base_(std::move(base)), count_(count) {}

  void apply_inplace(Amplitudes& amps, const RegisterLayout& layout, RegisterId r) const {
    for (std::int64_t i = 0; i < count_; ++i) base_.apply_inplace(amps, layout, r);
  }
  bool fixes_zero() const { return base_.fixes_zero(); }
  std::vector<SpectralComponent> decompose(const StateVector& x) const {
    auto parts = base_.decompose(x);
    for (auto& p : parts) {
      p.phase = std::fmod(p.phase * static_cast<double>(count_), 1.0);
    }
    return parts;
  }

 private:
  U base_;
  std::int64_t count_;
};

// ---------------------------------------------------------------------------
// Eigenstates

/// |lambda_k> = r^{-1/2} sum_l exp(2 pi i l k / r) |y^l mod N>, with
/// U|lambda_k> = exp(-2 pi i k / r) |lambda_k>. Throws if r is not the order.
StateVector eigenstate_lambda_k(std::int64_t y, std::int64_t n, std::int64_t r, std::int64_t k);

/// Phase in turns of the eigenvalue exp(2 pi i phase) carried by |lambda_k>:
/// (-k / r) mod 1.
double lambda_k_phase(std::int64_t r, std::int64_t k);

// ---------------------------------------------------------------------------
// Controlled operations

/// Lambda(U) directly: U on `target` wherever `control` reads 1.
template <RegisterUnitary U>
StateVector apply_controlled(const U& u, StateVector state, RegisterId control, RegisterId target) {
  const auto& layout = state.layout();
  layout.check_register(control);
  layout.check_register(target);
  if (layout.dim(control) != 2) throw std::invalid_argument("control register must be one qubit");
  if (control == target) throw std::invalid_argument("control and target must differ");
  Amplitudes branch = state.amplitudes();
  for (std::int64_t i = 0; i < layout.size(); ++i) {
    if (layout.label(i, control) == 0) branch[i] = 0.0;
  }
  u.apply_inplace(branch, layout, target);
  auto& amps = state.mutable_amplitudes();
  for (std::int64_t i = 0; i < layout.size(); ++i) {
    if (layout.label(i, control) == 1) amps[i] = branch[i];
  }
  return state;
}

/// Lambda(tau): |c>|a>|b> -> |c>|a>|b XOR (c ? a : 0)> on two equal
/// power-of-two registers.
StateVector apply_controlled_xor(StateVector state, RegisterId control, RegisterId source,
                                 RegisterId dest);

/// Negation of a one-qubit register.
StateVector apply_not(StateVector state, RegisterId r);

/// Lambda(U) on (C, X) built from U alone plus an ancilla Y in |0...0>:
///   N[C] L(tau)[C,X,Y] L(tau)[C,Y,X] U[X] L(tau)[C,Y,X] L(tau)[C,X,Y] N[C].
/// With C = 0 the tau steps park X in Y and U only sees |0...0>; with C = 1
/// U acts on X. Requires U|0...0> = |0...0> and Y in |0...0>.
template <RegisterUnitary U>
StateVector controlled_u_gadget(const U& u, StateVector state, RegisterId c, RegisterId x,
                                RegisterId y) {
  if (!u.fixes_zero()) throw std::invalid_argument("gadget needs U|0...0> = |0...0>");
  if (probabilities(state, y)[0] < 1.0 - 1e-12) {
    throw std::invalid_argument("gadget ancilla must start in |0...0>");
  }
  state = apply_not(std::move(state), c);
  state = apply_controlled_xor(std::move(state), c, x, y);
  state = apply_controlled_xor(std::move(state), c, y, x);
  u.apply_inplace(state.mutable_amplitudes(), state.layout(), x);
  state = apply_controlled_xor(std::move(state), c, y, x);
  state = apply_controlled_xor(std::move(state), c, x, y);
  return apply_not(std::move(state), c);
}

/// Von Neumann entropy (nats) of one register's reduced density matrix.
double entanglement_entropy(const StateVector& state, RegisterId r);

// ---------------------------------------------------------------------------
// PROC

/// kInPhase is H, Lambda(U), H: p0 = (1 + cos 2 pi phi) / 2.
/// kQuadrature inserts diag(1, -i) on the control after the first H:
/// p0 = (1 + sin 2 pi phi) / 2, which fixes the sign of phi.
enum class ProcBasis { kInPhase, kQuadrature };

inline constexpr RegisterId kControlRegister{0};
inline constexpr RegisterId kTargetRegister{1};

/// Registers (C, X) with C a single qubit.
struct ProcState {
  StateVector state;

  /// |0>_C tensor x.
  static ProcState prepare(const StateVector& x);
  /// The X register's state; valid while C is in a basis state.
  StateVector target() const;
};

struct ProcOutcome {
  int bit = 0;
  double p0 = 0.0;
  /// Control reset to |0> for the next round.
  ProcState next;
};

/// H (phase) Lambda(U) H on the control; the state just before readout.
template <RegisterUnitary U>
StateVector proc_circuit(const U& u, ProcState in, ProcBasis basis) {
  if (probabilities(in.state, kControlRegister)[0] < 1.0 - 1e-12) {
    throw std::invalid_argument("PROC needs the control qubit in |0>");
  }
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd h;
  h << s, s, s, -s;
  auto st = apply_register_matrix(std::move(in.state), kControlRegister, h);
  if (basis == ProcBasis::kQuadrature) {
    Eigen::Matrix2cd phase = Eigen::Matrix2cd::Zero();
    phase(0, 0) = 1.0;
    phase(1, 1) = Complex(0.0, -1.0);
    st = apply_register_matrix(std::move(st), kControlRegister, phase);
  }
  st = apply_controlled(u, std::move(st), kControlRegister, kTargetRegister);
  return apply_register_matrix(std::move(st), kControlRegister, h);
}

/// One round: circuit, read C, reset C.
template <RegisterUnitary U>
ProcOutcome proc_once(const U& u, ProcState in, Rng& rng, ProcBasis basis = ProcBasis::kInPhase) {
  auto st = proc_circuit(u, std::move(in), basis);
  const double p0 = probabilities(st, kControlRegister)[0];
  auto measured = measure_register(std::move(st), kControlRegister, rng);
  const int bit = static_cast<int>(measured.outcome.value);
  auto next = std::move(measured.state);
  if (bit == 1) next = apply_not(std::move(next), kControlRegister);
  return ProcOutcome{bit, p0, ProcState{std::move(next)}};
}

struct P0Estimate {
  int t = 0;
  int zeros = 0;  // y in y / t
  double p0_hat = 0.0;
  /// The X register after the last round.
  std::optional<StateVector> target;
};

/// t rounds of PROC on one X register, reusing it between rounds.
template <RegisterUnitary U>
P0Estimate estimate_p0(const U& u, const StateVector& x, int t, Rng& rng,
                       ProcBasis basis = ProcBasis::kInPhase) {
  if (t < 1) throw std::invalid_argument("estimate_p0 needs t >= 1");
  auto ps = ProcState::prepare(x);
  int zeros = 0;
  for (int i = 0; i < t; ++i) {
    auto out = proc_once(u, std::move(ps), rng, basis);
    zeros += out.bit == 0;
    ps = std::move(out.next);
  }
  return P0Estimate{t, zeros, static_cast<double>(zeros) / t, ps.target()};
}

/// Exact p0 of one PROC round on an eigenstate, read from amplitudes.
template <RegisterUnitary U>
double proc_p0_exact(const U& u, const StateVector& x, ProcBasis basis) {
  return probabilities(proc_circuit(u, ProcState::prepare(x), basis), kControlRegister)[0];
}

/// Joint law of t control bits when t PROC rounds run before any readout, by
/// simulating all t control qubits entangled with X. Exponential in t; the
/// reference for the collapse-first shortcut.
template <RegisterUnitary U>
Eigen::VectorXd proc_joint_distribution_full(const U& u, const StateVector& x, int t,
                                             ProcBasis basis = ProcBasis::kInPhase) {
  if (x.layout().num_registers() != 1) throw std::invalid_argument("X must be one register");
  std::vector<std::int64_t> dims(static_cast<std::size_t>(t), 2);
  dims.push_back(x.layout().dim(RegisterId{0}));
  const RegisterLayout layout(dims);
  Amplitudes amps = Amplitudes::Zero(layout.size());
  amps.head(x.amplitudes().size()) = x.amplitudes();
  StateVector st(layout, std::move(amps));
  const RegisterId target{static_cast<std::size_t>(t)};
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd h;
  h << s, s, s, -s;
  Eigen::Matrix2cd phase = Eigen::Matrix2cd::Zero();
  phase(0, 0) = 1.0;
  phase(1, 1) = Complex(0.0, -1.0);
  std::vector<RegisterId> controls;
  for (int i = 0; i < t; ++i) {
    const RegisterId c{static_cast<std::size_t>(i)};
    controls.push_back(c);
    st = apply_register_matrix(std::move(st), c, h);
    if (basis == ProcBasis::kQuadrature) st = apply_register_matrix(std::move(st), c, phase);
    st = apply_controlled(u, std::move(st), c, target);
    st = apply_register_matrix(std::move(st), c, h);
  }
  return joint_probabilities(st, controls);
}

/// The same law computed collapse-first: draw an eigencomponent by weight,
/// then t independent bits from its single-round p0.
template <RegisterUnitary U>
Eigen::VectorXd proc_joint_distribution_collapse_first(const U& u, const StateVector& x, int t,
                                                       ProcBasis basis = ProcBasis::kInPhase) {
  Eigen::VectorXd joint = Eigen::VectorXd::Zero(std::int64_t{1} << t);
  for (const auto& comp : u.decompose(x)) {
    const double p0 = proc_p0_exact(u, comp.state, basis);
    for (std::int64_t bits = 0; bits < joint.size(); ++bits) {
      double p = comp.weight;
      for (int i = 0; i < t; ++i) {
        const bool one = (bits >> (t - 1 - i)) & 1;
        p *= one ? 1.0 - p0 : p0;
      }
      joint[bits] += p;
    }
  }
  return joint;
}

// ---------------------------------------------------------------------------
// Phase estimation

struct StageRecord {
  int j = 0;
  int t = 0;
  int y_count = 0;  // zeros among the in-phase rounds
  double p0_hat = 0.0;
  int y_count_quadrature = 0;
  double p0_hat_quadrature = 0.0;
  /// Estimate of 2^j phi mod 1 from the two p0 readings.
  double turns = 0.0;
  /// Bits j+1 and j+2 of phi after reconciliation.
  std::string bits;
};

struct PhaseEstimate {
  /// Binary digits of phi, most significant first.
  std::vector<int> bits;
  std::vector<double> per_stage_p0;
  double epsilon = 0.0;
  std::vector<StageRecord> stages;
  /// Set when overlapping stage readings could not be reconciled.
  std::optional<std::string> failure;

  bool ok() const { return !failure.has_value(); }
  /// The bits as an integer c, phi ~ c / 2^l.
  std::int64_t numerator() const;
  double value() const;
};

inline constexpr double kStagePrecision = 1.0 / 8.0;

/// Rounds per p0 estimate so one stage (an in-phase and a quadrature
/// estimate) errs with probability at most epsilon / l, from the tail bound
/// (2/sqrt(2 pi)) exp(-delta^2 t / (2 p0 p1)) with p0 p1 <= 1/4 and
/// delta = 1/8, rounded up to a power of two.
int stage_sample_count(int l, double epsilon);

/// Rebuilds l bits of phi from stage estimates of 2^j phi mod 1, least
/// significant stage first. Each step picks whichever of the two halvings of
/// the running estimate lies within 1/8 of the stage reading.
PhaseEstimate reconcile_stages(std::vector<StageRecord> stages, int l, double epsilon);

/// Per-stage turns from the two p0 readings: atan2(2 p0_q - 1, 2 p0 - 1).
double turns_from_p0(double p0_in_phase, double p0_quadrature);

/// l bits of phi for an input that is an eigenstate or a superposition of
/// eigenstates of U = power(0); `power(j)` must return U^{2^j}.
///
/// The input is collapsed once onto an eigencomponent (weight |a|^2), then
/// every stage runs against that same eigenstate: one exact PROC simulation
/// gives p0, and t independent control bits are drawn from it per basis.
template <typename PowerOracle>
PhaseEstimate estimate_phase(PowerOracle&& power, const StateVector& input, int l, double epsilon,
                             Rng& rng, std::optional<int> t_override = std::nullopt) {
  if (l < 1) throw std::invalid_argument("estimate_phase needs l >= 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must be in (0, 1)");
  const int t = t_override.value_or(stage_sample_count(l, epsilon));
  if (t < 1) throw std::invalid_argument("stage sample count must be positive");

  auto base = power(0);
  auto components = base.decompose(input);
  double u = uniform01(rng);
  std::size_t pick = components.size() - 1;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (u < components[i].weight) {
      pick = i;
      break;
    }
    u -= components[i].weight;
  }
  const StateVector& eigen = components[pick].state;

  auto draw = [&](double p0) {
    int zeros = 0;
    for (int i = 0; i < t; ++i) zeros += bernoulli(rng, p0);
    return zeros;
  };
  std::vector<StageRecord> stages;
  for (int j = 0; j < l; ++j) {
    auto uj = power(j);
    StageRecord rec;
    rec.j = j;
    rec.t = t;
    rec.y_count = draw(proc_p0_exact(uj, eigen, ProcBasis::kInPhase));
    rec.y_count_quadrature = draw(proc_p0_exact(uj, eigen, ProcBasis::kQuadrature));
    rec.p0_hat = static_cast<double>(rec.y_count) / t;
    rec.p0_hat_quadrature = static_cast<double>(rec.y_count_quadrature) / t;
    rec.turns = turns_from_p0(rec.p0_hat, rec.p0_hat_quadrature);
    stages.push_back(std::move(rec));
  }
  return reconcile_stages(std::move(stages), l, epsilon);
}

// ---------------------------------------------------------------------------
// Order finding and factoring

struct KitaevEstimateRecord {
  PhaseEstimate estimate;
  std::int64_t c = 0;
  Convergent fraction;
};

struct KitaevRun {
  std::int64_t y = 0;
  std::int64_t n = 0;
  int l = 0;
  int t = 0;
  double epsilon = 0.0;
  std::vector<KitaevEstimateRecord> estimates;
  std::optional<std::int64_t> r;
  int repetitions = 0;
  /// Controlled-U^(2^j) applications, two bases per stage.
  int oracle_queries = 0;
};

struct KitaevOptions {
  double epsilon = 0.05;
  /// 0 selects 1 + ceil(log2 N).
  int bits = 0;
  int max_reps = 64;
};

/// 1 + ceil(log2 N).
int kitaev_bits(std::int64_t n);

/// Phase estimation of multiplication by y on X = |1>, rounded to k/r with
/// r <= N by continued fractions, checked with modpow. Repeats on k = 0, on
/// reconciliation failure, and on failed verification; throws
/// BudgetExhausted after max_reps estimates.
KitaevRun kitaev_order(std::int64_t y, std::int64_t n, Rng& rng, const KitaevOptions& opts = {});

}  // namespace qabel
