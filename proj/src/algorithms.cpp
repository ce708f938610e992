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

#include "qabel/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "qabel/fourier.hpp"
#include "qabel/kitaev.hpp"

namespace qabel {

namespace {

constexpr RegisterId kIn{0};
constexpr RegisterId kOut{1};

int boolean_width(const TruthTable& f) {
  if (!f.group().is_boolean()) throw std::invalid_argument("expected a function on B^n");
  return static_cast<int>(f.group().rank());
}

void require_single_bit_codomain(const TruthTable& f) {
  if (f.value_bound() > 2) throw std::invalid_argument("expected a function into B = {0, 1}");
}

}  // namespace

StateVector OracleBox::apply_xor(StateVector state, RegisterId in, RegisterId out) {
  ++queries_;
  return apply_oracle_xor(std::move(state), *f_, in, out);
}

StateVector OracleBox::apply_modadd(StateVector state, RegisterId in, RegisterId out) {
  ++queries_;
  return apply_oracle_modadd(std::move(state), *f_, in, out);
}

// ---------------------------------------------------------------------------
// Deutsch family

std::string to_string(DeutschOutcome o) {
  switch (o) {
    case DeutschOutcome::kConstant: return "constant";
    case DeutschOutcome::kBalanced: return "balanced";
    case DeutschOutcome::kInconclusive: return "inconclusive";
  }
  return "?";
}

TruthTable constant_table(int n, std::uint64_t value) {
  const auto g = boolean_group(n);
  return TruthTable(g, std::vector<std::uint64_t>(g.order(), value));
}

TruthTable linear_table(int n, BitVec k) {
  const auto g = boolean_group(n);
  std::vector<std::uint64_t> values(g.order());
  for (std::uint64_t x = 0; x < g.order(); ++x) values[x] = static_cast<std::uint64_t>(dot(k, x));
  return TruthTable(g, std::move(values));
}

TruthTable random_balanced_table(int n, Rng& rng) {
  const auto g = boolean_group(n);
  std::vector<std::uint64_t> values(g.order(), 0);
  std::fill(values.begin() + static_cast<std::ptrdiff_t>(g.order() / 2), values.end(), 1);
  for (std::uint64_t i = g.order(); i > 1; --i) {
    std::swap(values[i - 1], values[uniform_below(rng, i)]);
  }
  return TruthTable(g, std::move(values));
}

DeutschOutcome classify_by_scan(const TruthTable& f) {
  const auto& v = f.values();
  const auto ones = static_cast<std::uint64_t>(std::count(v.begin(), v.end(), 1));
  const auto zeros = static_cast<std::uint64_t>(std::count(v.begin(), v.end(), 0));
  if (ones + zeros != v.size()) return DeutschOutcome::kInconclusive;
  if (ones == 0 || zeros == 0) return DeutschOutcome::kConstant;
  if (ones == zeros) return DeutschOutcome::kBalanced;
  return DeutschOutcome::kInconclusive;
}

namespace {

StateVector deutsch_xor_circuit(OracleBox& box) {
  auto st = init_basis(RegisterLayout{2, 2}, {0, 0});
  st = hadamard_n(std::move(st), kIn);
  st = box.apply_xor(std::move(st), kIn, kOut);
  // Dual-basis readout = H then standard readout.
  st = hadamard_n(std::move(st), kOut);
  return hadamard_n(std::move(st), kIn);
}

StateVector phase_kickback_circuit(OracleBox& box, int n) {
  auto st = init_basis(RegisterLayout{std::int64_t{1} << n, 2}, {0, 1});
  st = hadamard_n(std::move(st), kIn);
  st = hadamard_n(std::move(st), kOut);  // (|0> - |1>)/sqrt2
  st = box.apply_xor(std::move(st), kIn, kOut);
  return hadamard_n(std::move(st), kIn);
}

}  // namespace

StateVector deutsch_xor_state(const TruthTable& f) {
  if (boolean_width(f) != 1) throw std::invalid_argument("Deutsch XOR needs f: B -> B");
  require_single_bit_codomain(f);
  OracleBox box(f);
  return deutsch_xor_circuit(box);
}

DeutschVerdict deutsch_xor_original(const TruthTable& f, Rng& rng) {
  if (boolean_width(f) != 1) throw std::invalid_argument("Deutsch XOR needs f: B -> B");
  require_single_bit_codomain(f);
  OracleBox box(f);
  auto st = deutsch_xor_circuit(box);
  auto second = measure_register(std::move(st), kOut, rng);
  DeutschVerdict verdict;
  verdict.queries_used = box.queries();
  if (second.outcome.value == 0) return verdict;
  auto first = measure_register(std::move(second.state), kIn, rng);
  verdict.measured_label = first.outcome.value;
  verdict.outcome = first.outcome.value == 0 ? DeutschOutcome::kConstant : DeutschOutcome::kBalanced;
  return verdict;
}

StateVector deutsch_jozsa_state(const TruthTable& f) {
  const int n = boolean_width(f);
  require_single_bit_codomain(f);
  OracleBox box(f);
  return phase_kickback_circuit(box, n);
}

DeutschVerdict deutsch_jozsa(const TruthTable& f, Rng& rng) {
  const int n = boolean_width(f);
  require_single_bit_codomain(f);
  OracleBox box(f);
  auto st = phase_kickback_circuit(box, n);
  const auto m = measure_register(std::move(st), kIn, rng);
  DeutschVerdict verdict;
  verdict.queries_used = box.queries();
  verdict.measured_label = m.outcome.value;
  verdict.outcome = m.outcome.value == 0 ? DeutschOutcome::kConstant : DeutschOutcome::kBalanced;
  return verdict;
}

FkIdentification identify_linear_fk(const TruthTable& f, Rng& rng) {
  const int n = boolean_width(f);
  require_single_bit_codomain(f);
  OracleBox box(f);
  auto st = phase_kickback_circuit(box, n);
  const auto m = measure_register(std::move(st), kIn, rng);
  return FkIdentification{static_cast<BitVec>(m.outcome.value), m.outcome.probability, box.queries()};
}

FkIdentification identify_linear_fk_classical(const TruthTable& f) {
  const int n = boolean_width(f);
  require_single_bit_codomain(f);
  FkIdentification out;
  for (int i = 0; i < n; ++i) {
    const BitVec probe = BitVec{1} << (n - 1 - i);  // 10...0, 01...0, ...
    out.k = (out.k << 1) | f.at(probe);
    ++out.queries_used;
  }
  out.probability = 1.0;
  return out;
}

// ---------------------------------------------------------------------------
// Simon

SimonInstance make_simon_instance(int n, BitVec xi) {
  const auto g = boolean_group(n);
  if (xi == 0 || xi >= g.order()) throw std::invalid_argument("xi must be a nonzero n-bit string");
  std::vector<std::uint64_t> values(g.order());
  for (BitVec x = 0; x < g.order(); ++x) values[x] = std::min(x, x ^ xi);
  return SimonInstance{n, TruthTable(g, std::move(values)), xi};
}

SimonInstance simon_instance_from_table(TruthTable f) {
  const int n = boolean_width(f);
  if (f.value_bound() > f.group().order()) {
    throw std::invalid_argument("Simon function must map B^n into B^n");
  }
  // The promise pins xi to f's unique partner of 0.
  BitVec xi = 0;
  for (BitVec x = 1; x < f.group().order(); ++x) {
    if (f.at(x) == f.at(0)) {
      xi = x;
      break;
    }
  }
  if (xi == 0) throw std::invalid_argument("Simon promise violated: f(0) has no partner");
  for (BitVec x = 0; x < f.group().order(); ++x) {
    for (BitVec y = x + 1; y < f.group().order(); ++y) {
      if ((f.at(x) == f.at(y)) != (y == (x ^ xi))) {
        throw std::invalid_argument("Simon promise violated: f is not 2-to-1 with a single period");
      }
    }
  }
  return SimonInstance{n, std::move(f), xi};
}

BitVec simon_sample(const SimonInstance& inst, Rng& rng) {
  const auto dim = std::int64_t{1} << inst.n;
  OracleBox box(inst.f);
  auto st = init_basis(RegisterLayout{dim, dim}, {0, 0});
  st = hadamard_n(std::move(st), kIn);                       // Step 1
  st = box.apply_xor(std::move(st), kIn, kOut);              // Step 2
  st = measure_register(std::move(st), kOut, rng).state;     // Step 3
  st = hadamard_n(std::move(st), kIn);                       // Step 4
  return static_cast<BitVec>(measure_register(std::move(st), kIn, rng).outcome.value);  // Step 5
}

Eigen::VectorXd simon_output_distribution(const SimonInstance& inst) {
  const auto dim = std::int64_t{1} << inst.n;
  OracleBox box(inst.f);
  auto st = init_basis(RegisterLayout{dim, dim}, {0, 0});
  st = hadamard_n(std::move(st), kIn);
  st = box.apply_xor(std::move(st), kIn, kOut);
  // Reading register 2 first does not change register 1's marginal.
  st = hadamard_n(std::move(st), kIn);
  return probabilities(st, kIn);
}

SimonResult simon_solve(const SimonInstance& inst, Rng& rng, int max_samples) {
  SimonResult result;
  GF2Echelon echelon(inst.n);
  GF2Matrix rows(inst.n);
  while (echelon.rank() < inst.n - 1) {
    if (static_cast<int>(result.samples.size()) >= max_samples) {
      throw BudgetExhausted("simon_solve: rank " + std::to_string(echelon.rank()) + " of " +
                            std::to_string(inst.n - 1) + " after " + std::to_string(max_samples) +
                            " samples");
    }
    const auto y = simon_sample(inst, rng);
    ++result.oracle_queries;
    result.samples.push_back(y);
    rows.add_row(y);
    echelon.insert(y);
  }
  const auto basis = gf2_nullspace(rows);
  if (basis.size() != 1) {
    throw std::invalid_argument("Simon promise violated: samples leave no unique period");
  }
  result.xi = basis.front();
  return result;
}

// ---------------------------------------------------------------------------
// Shor

TruthTable modexp_table(std::int64_t y, std::int64_t n, std::int64_t q) {
  const auto g = make_group({q}, limits::kFastMaxOrder);
  std::vector<std::uint64_t> values(static_cast<std::size_t>(q));
  std::int64_t power = 1 % n;
  for (std::int64_t x = 0; x < q; ++x) {
    values[static_cast<std::size_t>(x)] = static_cast<std::uint64_t>(power);
    power = mulmod(power, y, n);
  }
  return TruthTable(g, std::move(values));
}

std::int64_t shor_register_size(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("N must be at least 2");
  return static_cast<std::int64_t>(std::bit_ceil(static_cast<std::uint64_t>(checked_mul(n, n))));
}

namespace {

void check_shor_args(std::int64_t y, std::int64_t n, std::int64_t q) {
  if (n < 2) throw std::invalid_argument("N must be at least 2");
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  if (y < 1 || y >= n) throw std::invalid_argument("y must lie in [1, N)");
  if (gcd(y, n) != 1) {
    throw std::invalid_argument(std::to_string(y) + " is not coprime to " + std::to_string(n));
  }
}

StateVector shor_steps_1_2(const TruthTable& f, std::int64_t n, std::int64_t q) {
  OracleBox box(f);
  auto st = init_basis(RegisterLayout{q, n}, {0, 0});
  st = dft_q(std::move(st), kIn);
  return box.apply_modadd(std::move(st), kIn, kOut);
}

}  // namespace

std::int64_t shor_sample(std::int64_t y, std::int64_t n, std::int64_t q, Rng& rng) {
  check_shor_args(y, n, q);
  const auto f = modexp_table(y, n, q);
  auto st = shor_steps_1_2(f, n, q);                        // Steps 1-2
  st = measure_register(std::move(st), kOut, rng).state;    // Step 3
  st = dft_q(std::move(st), kIn);                           // Step 4
  return measure_register(std::move(st), kIn, rng).outcome.value;  // Step 5
}

Eigen::VectorXd shor_output_distribution(std::int64_t y, std::int64_t n, std::int64_t q) {
  check_shor_args(y, n, q);
  const auto f = modexp_table(y, n, q);
  auto st = shor_steps_1_2(f, n, q);
  st = dft_q(std::move(st), kIn);
  return probabilities(st, kIn);
}

ShorResidue shor_step3_residue(std::int64_t y, std::int64_t n, std::int64_t q, Rng& rng) {
  check_shor_args(y, n, q);
  const auto f = modexp_table(y, n, q);
  auto measured = measure_register(shor_steps_1_2(f, n, q), kOut, rng);
  const auto value = measured.outcome.value;
  Amplitudes reg1(q);
  for (std::int64_t x = 0; x < q; ++x) reg1[x] = measured.state.amplitude({x, value});
  return ShorResidue{value, normalized_state(RegisterLayout({q}), std::move(reg1))};
}

std::optional<std::int64_t> OrderRecovery::offer(std::int64_t denominator) {
  if (denominator < 1) return std::nullopt;
  const auto combined = lcm(accumulated_, denominator);
  for (const auto cand : {denominator, combined}) {
    if (cand <= n_ && modpow(y_, cand, n_) == 1) return reduce_to_order(y_, cand, n_);
  }
  accumulated_ = combined <= n_ ? combined : denominator;
  return std::nullopt;
}

ShorRun shor_order(std::int64_t y, std::int64_t n, Rng& rng, int max_reps,
                   std::optional<std::int64_t> q) {
  ShorRun run;
  run.n = n;
  run.y = y;
  run.q = q.value_or(shor_register_size(n));
  check_shor_args(y, n, run.q);
  OrderRecovery recovery(y, n);
  for (int rep = 0; rep < max_reps; ++rep) {
    const auto c = shor_sample(y, n, run.q, rng);
    ++run.repetitions;
    ++run.oracle_queries;
    const auto fraction = best_rational(c, run.q, n);
    run.samples.push_back({c, fraction});
    if (auto r = recovery.offer(fraction.r)) {
      run.r = *r;
      return run;
    }
  }
  throw BudgetExhausted("shor_order: no verified order for y = " + std::to_string(y) + " mod " +
                        std::to_string(n) + " after " + std::to_string(max_reps) + " samples");
}

// ---------------------------------------------------------------------------
// Factoring

std::string to_string(OrderMethod m) { return m == OrderMethod::kShor ? "shor" : "kitaev"; }

OrderMethod parse_order_method(const std::string& s) {
  if (s == "shor") return OrderMethod::kShor;
  if (s == "kitaev") return OrderMethod::kKitaev;
  throw std::invalid_argument("unknown order-finding method '" + s + "'");
}

FactorRun factor(std::int64_t n, OrderMethod method, Rng& rng, int max_attempts) {
  if (n < 4) throw std::invalid_argument("N must be composite and at least 4");
  FactorRun run;
  run.n = n;
  run.method = method;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    FactorAttempt a;
    a.y = 2 + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(n - 3)));
    a.gcd_with_n = gcd(a.y, n);
    if (a.gcd_with_n > 1) {
      a.divisor = a.gcd_with_n;
      a.note = "shared factor";
      run.divisor = a.gcd_with_n;
      run.attempts.push_back(a);
      return run;
    }
    try {
      if (method == OrderMethod::kShor) {
        const auto sr = shor_order(a.y, n, rng);
        run.oracle_queries += sr.oracle_queries;
        a.r = sr.r;
      } else {
        const auto kr = kitaev_order(a.y, n, rng);
        run.oracle_queries += kr.oracle_queries;
        a.r = kr.r;
      }
    } catch (const BudgetExhausted&) {
      a.note = "order finding exhausted its budget";
      run.attempts.push_back(a);
      continue;
    }
    const auto r = *a.r;
    if (r % 2 != 0) {
      a.note = "odd order";
      run.attempts.push_back(a);
      continue;
    }
    const auto half = modpow(a.y, r / 2, n);
    if (half == n - 1) {
      a.note = "y^(r/2) = -1 mod N";
      run.attempts.push_back(a);
      continue;
    }
    for (const auto d : {gcd((half + n - 1) % n, n), gcd(half + 1, n)}) {
      if (d > 1 && d < n) {
        a.divisor = d;
        break;
      }
    }
    if (a.divisor) {
      a.note = "order reduction";
      run.divisor = *a.divisor;
      run.attempts.push_back(a);
      return run;
    }
    a.note = "trivial gcd";
    run.attempts.push_back(a);
  }
  throw BudgetExhausted("factor: no divisor of " + std::to_string(n) + " after " +
                        std::to_string(max_attempts) + " attempts");
}

}  // namespace qabel
