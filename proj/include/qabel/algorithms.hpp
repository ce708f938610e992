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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qabel/common.hpp"
#include "qabel/gf2.hpp"
#include "qabel/group.hpp"
#include "qabel/numtheory.hpp"
#include "qabel/state.hpp"

namespace qabel {

/// A truth table behind the standard oracle unitaries, counting how many
/// times it is applied.
class OracleBox {
 public:
  explicit OracleBox(const TruthTable& f) : f_(&f) {}

  StateVector apply_xor(StateVector state, RegisterId in, RegisterId out);
  StateVector apply_modadd(StateVector state, RegisterId in, RegisterId out);
  int queries() const { return queries_; }

 private:
  const TruthTable* f_;
  int queries_ = 0;
};

// ---------------------------------------------------------------------------
// Deutsch / Deutsch-Jozsa / f_k

enum class DeutschOutcome { kConstant, kBalanced, kInconclusive };
std::string to_string(DeutschOutcome o);

struct DeutschVerdict {
  DeutschOutcome outcome = DeutschOutcome::kInconclusive;
  int queries_used = 0;
  /// Label read from the input register (or -1 when it was never read).
  std::int64_t measured_label = -1;
};

TruthTable constant_table(int n, std::uint64_t value);
/// f_k(x) = k . x on B^n.
TruthTable linear_table(int n, BitVec k);
/// Uniformly random balanced f: B^n -> B.
TruthTable random_balanced_table(int n, Rng& rng);
/// Classical full scan: constant, balanced, or neither (reported as kInconclusive).
DeutschOutcome classify_by_scan(const TruthTable& f);

/// State of the original XOR circuit just before measurement: U_f on
/// (|0>+|1>)|0>/sqrt2, then H on both qubits so standard-basis readout is the
/// dual-basis measurement. Register 1 reading 0 means 0' (inconclusive).
StateVector deutsch_xor_state(const TruthTable& f);

/// One query. Reads qubit 2 in the dual basis; on 1' reads qubit 1 in the
/// dual basis, where 0' means constant and 1' balanced.
DeutschVerdict deutsch_xor_original(const TruthTable& f, Rng& rng);

/// Input register after the single-query circuit and H_n: output qubit set to
/// (|0>-|1>)/sqrt2, one U_f, H_n on the n-qubit input register.
StateVector deutsch_jozsa_state(const TruthTable& f);

/// Constant iff the input register reads 0...0. Exact under the promise.
DeutschVerdict deutsch_jozsa(const TruthTable& f, Rng& rng);

struct FkIdentification {
  BitVec k = 0;
  double probability = 0.0;
  int queries_used = 0;
};

/// Same circuit as deutsch_jozsa; the measured label is k.
FkIdentification identify_linear_fk(const TruthTable& f, Rng& rng);

/// Classical route: n queries on 10...0, 01...0, ..., 0...01.
FkIdentification identify_linear_fk_classical(const TruthTable& f);

// ---------------------------------------------------------------------------
// Simon

struct SimonInstance {
  int n = 0;
  TruthTable f;
  /// Known only to tests and reporting. The solver never reads it.
  BitVec hidden_xi = 0;
};

/// f(x) = min(x, x XOR xi), which is 2-to-1 with period xi.
SimonInstance make_simon_instance(int n, BitVec xi);

/// Checks f(x) = f(y) iff y = x XOR xi for some nonzero xi and wraps it.
/// Throws std::invalid_argument when f breaks the promise.
SimonInstance simon_instance_from_table(TruthTable f);

/// Steps 1-5 on two n-qubit registers; returns y with y . xi = 0.
BitVec simon_sample(const SimonInstance& inst, Rng& rng);

/// Exact distribution of simon_sample's output, from amplitudes.
Eigen::VectorXd simon_output_distribution(const SimonInstance& inst);

struct SimonResult {
  BitVec xi = 0;
  std::vector<BitVec> samples;
  int oracle_queries = 0;
};

inline int default_simon_max_samples(int n) { return 4 * n + 20; }

/// Samples until the rows reach rank n-1, then returns the nonzero nullspace
/// vector. Throws BudgetExhausted after `max_samples` draws.
SimonResult simon_solve(const SimonInstance& inst, Rng& rng, int max_samples);

// ---------------------------------------------------------------------------
// Shor

/// f(x) = y^x mod N on Z_q.
TruthTable modexp_table(std::int64_t y, std::int64_t n, std::int64_t q);

/// Least power of two >= N^2.
std::int64_t shor_register_size(std::int64_t n);

/// Steps 1-5 on registers (q, N); returns the measured c.
std::int64_t shor_sample(std::int64_t y, std::int64_t n, std::int64_t q, Rng& rng);

/// Exact distribution of c, from amplitudes.
Eigen::VectorXd shor_output_distribution(std::int64_t y, std::int64_t n, std::int64_t q);

struct ShorResidue {
  std::int64_t observed_value = 0;
  /// Register 1 after register 2 was read, as a one-register state.
  StateVector register1;
};

/// Steps 1-3 only.
ShorResidue shor_step3_residue(std::int64_t y, std::int64_t n, std::int64_t q, Rng& rng);

struct ShorSampleRecord {
  std::int64_t c = 0;
  Convergent fraction;
};

struct ShorRun {
  std::int64_t n = 0;
  std::int64_t y = 0;
  std::int64_t q = 0;
  std::vector<ShorSampleRecord> samples;
  std::optional<std::int64_t> r;
  int repetitions = 0;
  int oracle_queries = 0;
};

inline constexpr int kDefaultMaxOrderReps = 64;

/// Repeats shor_sample until a continued-fraction denominator (or an lcm of
/// them) verifies classically. Throws BudgetExhausted after `max_reps`.
/// `q` defaults to shor_register_size(N).
ShorRun shor_order(std::int64_t y, std::int64_t n, Rng& rng, int max_reps = kDefaultMaxOrderReps,
                   std::optional<std::int64_t> q = std::nullopt);

/// Accumulates candidate denominators and recognises the order of y once
/// some candidate, or the lcm of recent ones, verifies.
class OrderRecovery {
 public:
  OrderRecovery(std::int64_t y, std::int64_t n) : y_(y), n_(n) {}
  /// Returns the exact order once it is determined.
  std::optional<std::int64_t> offer(std::int64_t denominator);

 private:
  std::int64_t y_;
  std::int64_t n_;
  std::int64_t accumulated_ = 1;
};

// ---------------------------------------------------------------------------
// Factoring

enum class OrderMethod { kShor, kKitaev };
std::string to_string(OrderMethod m);
OrderMethod parse_order_method(const std::string& s);

struct FactorAttempt {
  std::int64_t y = 0;
  std::int64_t gcd_with_n = 1;
  std::optional<std::int64_t> r;
  std::optional<std::int64_t> divisor;
  std::string note;
};

struct FactorRun {
  std::int64_t n = 0;
  OrderMethod method = OrderMethod::kShor;
  std::int64_t divisor = 0;
  std::vector<FactorAttempt> attempts;
  int oracle_queries = 0;
};

inline constexpr int kDefaultFactorAttempts = 20;

/// Random y; a shared factor with N is returned at once, otherwise the order
/// r of y gives gcd(y^{r/2} +- 1, N) when r is even and y^{r/2} != -1.
FactorRun factor(std::int64_t n, OrderMethod method, Rng& rng,
                 int max_attempts = kDefaultFactorAttempts);

}  // namespace qabel
