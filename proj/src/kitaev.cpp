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

#include "qabel/kitaev.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qabel/algorithms.hpp"
#include "qabel/group.hpp"

namespace qabel {

namespace {

double circular_distance(double a, double b) {
  double d = std::fmod(a - b, 1.0);
  if (d < 0) d += 1.0;
  return std::min(d, 1.0 - d);
}

double wrap_turns(double x) {
  double w = std::fmod(x, 1.0);
  if (w < 0) w += 1.0;
  if (w >= 1.0) w = 0.0;
  return w;
}

std::string two_bits(double turns) {
  const int q = static_cast<int>(std::floor(wrap_turns(turns) * 4.0)) & 3;
  return std::string{static_cast<char>('0' + (q >> 1)), static_cast<char>('0' + (q & 1))};
}

void require_single_register(const StateVector& x) {
  if (x.layout().num_registers() != 1) {
    throw std::invalid_argument("expected a single-register state");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// MultUnitary

MultUnitary::MultUnitary(std::int64_t y, std::int64_t n) : y_(y), n_(n) {
  if (n < 2) throw std::invalid_argument("modulus must be at least 2");
  if (y < 1 || y >= n) throw std::invalid_argument("multiplier must lie in [1, N)");
  if (gcd(y, n) != 1) {
    throw std::invalid_argument(std::to_string(y) + " is not coprime to " + std::to_string(n));
  }
}

MultUnitary mult_unitary(std::int64_t y, std::int64_t n) {
  if (y < 2) throw std::invalid_argument("multiplier must be at least 2");
  return MultUnitary(y, n);
}

std::int64_t MultUnitary::map(std::int64_t m) const {
  if (m < 0) throw std::invalid_argument("negative label");
  if (m >= n_) return m;
  return mulmod(m, y_, n_);
}

MultUnitary MultUnitary::power_of_two(int j) const {
  if (j < 0) throw std::invalid_argument("negative power index");
  std::int64_t y = y_;
  for (int i = 0; i < j; ++i) y = mulmod(y, y, n_);
  return MultUnitary(y, n_);
}

std::vector<std::int64_t> MultUnitary::permutation(std::int64_t dim) const {
  if (dim < n_) throw std::invalid_argument("register too small for multiplication mod N");
  std::vector<std::int64_t> perm(static_cast<std::size_t>(dim));
  for (std::int64_t m = 0; m < dim; ++m) perm[static_cast<std::size_t>(m)] = map(m);
  return perm;
}

Eigen::MatrixXcd MultUnitary::matrix(std::int64_t dim) const {
  const auto perm = permutation(dim);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::int64_t i = 0; i < dim; ++i) m(perm[static_cast<std::size_t>(i)], i) = 1.0;
  return m;
}

void MultUnitary::apply_inplace(Amplitudes& amps, const RegisterLayout& layout, RegisterId r) const {
  layout.check_register(r);
  const auto d = layout.dim(r);
  const auto perm = permutation(d);
  Amplitudes out(amps.size());
  for_each_register_line(layout, r, [&](std::int64_t base, std::int64_t s) {
    for (std::int64_t k = 0; k < d; ++k) out[base + perm[static_cast<std::size_t>(k)] * s] = amps[base + k * s];
  });
  amps = std::move(out);
}

StateVector MultUnitary::apply(StateVector state, RegisterId r) const {
  apply_inplace(state.mutable_amplitudes(), state.layout(), r);
  return state;
}

std::vector<SpectralComponent> MultUnitary::decompose(const StateVector& x) const {
  require_single_register(x);
  const auto d = x.layout().dim(RegisterId{0});
  const auto perm = permutation(d);
  // Order of the permutation = lcm of its cycle lengths.
  std::int64_t order = 1;
  std::vector<char> seen(static_cast<std::size_t>(d), 0);
  for (std::int64_t start = 0; start < d; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::int64_t len = 0;
    for (auto m = start; !seen[static_cast<std::size_t>(m)]; m = perm[static_cast<std::size_t>(m)]) {
      seen[static_cast<std::size_t>(m)] = 1;
      ++len;
    }
    order = lcm(order, len);
  }
  // P_k = (1/order) sum_s exp(-2 pi i k s / order) U^s projects onto
  // eigenvalue exp(2 pi i k / order).
  std::vector<Amplitudes> powers;
  powers.reserve(static_cast<std::size_t>(order));
  Amplitudes current = x.amplitudes();
  for (std::int64_t s = 0; s < order; ++s) {
    powers.push_back(current);
    Amplitudes next(d);
    for (std::int64_t m = 0; m < d; ++m) next[perm[static_cast<std::size_t>(m)]] = current[m];
    current = std::move(next);
  }
  std::vector<SpectralComponent> out;
  for (std::int64_t k = 0; k < order; ++k) {
    Amplitudes v = Amplitudes::Zero(d);
    for (std::int64_t s = 0; s < order; ++s) {
      v += unit_root(-k * s, order) * powers[static_cast<std::size_t>(s)];
    }
    v /= static_cast<double>(order);
    const double w = v.squaredNorm();
    if (w < 1e-14) continue;
    out.push_back({static_cast<double>(k) / static_cast<double>(order), w,
                   normalized_state(x.layout(), std::move(v))});
  }
  return out;
}

// ---------------------------------------------------------------------------
// DenseUnitary

DenseUnitary::DenseUnitary(Eigen::MatrixXcd m, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1) throw std::invalid_argument("unitary must be square");
  const Eigen::MatrixXcd gram = m_.adjoint() * m_;
  if ((gram - Eigen::MatrixXcd::Identity(m_.rows(), m_.cols())).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("matrix is not unitary");
  }
}

void DenseUnitary::apply_inplace(Amplitudes& amps, const RegisterLayout& layout, RegisterId r) const {
  layout.check_register(r);
  const auto d = layout.dim(r);
  if (d != m_.rows()) throw std::invalid_argument("unitary size does not match the register");
  Amplitudes line(d);
  for_each_register_line(layout, r, [&](std::int64_t base, std::int64_t s) {
    for (std::int64_t k = 0; k < d; ++k) line[k] = amps[base + k * s];
    const Amplitudes mapped = m_ * line;
    for (std::int64_t k = 0; k < d; ++k) amps[base + k * s] = mapped[k];
  });
}

bool DenseUnitary::fixes_zero() const {
  Amplitudes e0 = Amplitudes::Zero(m_.rows());
  e0[0] = 1.0;
  return (m_.col(0) - e0).cwiseAbs().maxCoeff() < 1e-12;
}

std::vector<SpectralComponent> DenseUnitary::decompose(const StateVector& x) const {
  require_single_register(x);
  if (x.layout().dim(RegisterId{0}) != m_.rows()) {
    throw std::invalid_argument("state size does not match the unitary");
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m_);
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  const auto d = m_.rows();
  std::vector<double> phases(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) {
    phases[static_cast<std::size_t>(i)] = wrap_turns(std::arg(values[i]) / (2.0 * std::numbers::pi));
  }
  std::vector<char> used(static_cast<std::size_t>(d), 0);
  std::vector<SpectralComponent> out;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    std::vector<Eigen::Index> group;
    for (Eigen::Index j = i; j < d; ++j) {
      if (!used[static_cast<std::size_t>(j)] &&
          circular_distance(phases[static_cast<std::size_t>(i)], phases[static_cast<std::size_t>(j)]) < 1e-8) {
        used[static_cast<std::size_t>(j)] = 1;
        group.push_back(j);
      }
    }
    Eigen::MatrixXcd basis(d, static_cast<Eigen::Index>(group.size()));
    for (std::size_t g = 0; g < group.size(); ++g) basis.col(static_cast<Eigen::Index>(g)) = vectors.col(group[g]);
    // Orthonormal basis of the eigenspace.
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(basis);
    const Eigen::MatrixXcd q =
        qr.householderQ() * Eigen::MatrixXcd::Identity(d, static_cast<Eigen::Index>(group.size()));
    Amplitudes v = q * (q.adjoint() * x.amplitudes());
    const double w = v.squaredNorm();
    if (w < 1e-14) continue;
    out.push_back({phases[static_cast<std::size_t>(i)], w, normalized_state(x.layout(), std::move(v))});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Eigenstates

StateVector eigenstate_lambda_k(std::int64_t y, std::int64_t n, std::int64_t r, std::int64_t k) {
  if (r != order_bruteforce(y, n)) {
    throw std::invalid_argument("r = " + std::to_string(r) + " is not the order of " +
                                std::to_string(y) + " mod " + std::to_string(n));
  }
  if (k < 0 || k >= r) throw std::invalid_argument("k must lie in [0, r)");
  const RegisterLayout layout({n});
  Amplitudes amps = Amplitudes::Zero(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(r));
  std::int64_t power = 1;
  for (std::int64_t l = 0; l < r; ++l) {
    amps[power] = unit_root(l * k, r) * scale;
    power = mulmod(power, y, n);
  }
  return StateVector(layout, std::move(amps));
}

double lambda_k_phase(std::int64_t r, std::int64_t k) {
  return static_cast<double>((r - k % r) % r) / static_cast<double>(r);
}

// ---------------------------------------------------------------------------
// Controlled operations

StateVector apply_controlled_xor(StateVector state, RegisterId control, RegisterId source,
                                 RegisterId dest) {
  const auto& layout = state.layout();
  layout.check_register(control);
  layout.check_register(source);
  layout.check_register(dest);
  if (layout.dim(control) != 2) throw std::invalid_argument("control register must be one qubit");
  if (source == dest || control == source || control == dest) {
    throw std::invalid_argument("controlled XOR needs three distinct registers");
  }
  if (layout.dim(source) != layout.dim(dest) ||
      !std::has_single_bit(static_cast<std::uint64_t>(layout.dim(source)))) {
    throw std::invalid_argument("controlled XOR needs two equal qubit registers");
  }
  const auto s_dest = layout.stride(dest);
  const auto& in = state.amplitudes();
  Amplitudes out(in.size());
  for (std::int64_t i = 0; i < layout.size(); ++i) {
    if (layout.label(i, control) == 0) {
      out[i] = in[i];
      continue;
    }
    const auto a = layout.label(i, source);
    const auto b = layout.label(i, dest);
    out[i + ((a ^ b) - b) * s_dest] = in[i];
  }
  state.mutable_amplitudes() = std::move(out);
  return state;
}

StateVector apply_not(StateVector state, RegisterId r) {
  state.layout().check_register(r);
  if (state.layout().dim(r) != 2) throw std::invalid_argument("negation needs a one-qubit register");
  const std::int64_t flip[] = {1, 0};
  return apply_register_permutation(std::move(state), r, flip);
}

double entanglement_entropy(const StateVector& state, RegisterId r) {
  const auto& layout = state.layout();
  layout.check_register(r);
  const auto d = layout.dim(r);
  const auto s = layout.stride(r);
  const auto rest = layout.size() / d;
  Eigen::MatrixXcd m(d, rest);
  const auto& amps = state.amplitudes();
  for (std::int64_t i = 0; i < layout.size(); ++i) {
    const auto col = (i / (s * d)) * s + i % s;
    m(layout.label(i, r), col) = amps[i];
  }
  const Eigen::MatrixXcd rho = m * m.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double p = solver.eigenvalues()[i];
    if (p > 0.0) entropy -= p * std::log(p);
  }
  return std::max(entropy, 0.0);
}

// ---------------------------------------------------------------------------
// PROC

ProcState ProcState::prepare(const StateVector& x) {
  require_single_register(x);
  const auto d = x.layout().dim(RegisterId{0});
  const RegisterLayout layout({2, d});
  Amplitudes amps = Amplitudes::Zero(layout.size());
  amps.head(d) = x.amplitudes();
  return ProcState{StateVector(layout, std::move(amps))};
}

StateVector ProcState::target() const {
  const auto probs = probabilities(state, kControlRegister);
  const std::int64_t c = probs[1] > probs[0] ? 1 : 0;
  if (probs[c] < 1.0 - 1e-9) throw std::logic_error("control qubit is not in a basis state");
  const auto d = state.layout().dim(kTargetRegister);
  Amplitudes amps = state.amplitudes().segment(c * d, d);
  return normalized_state(RegisterLayout({d}), std::move(amps));
}

// ---------------------------------------------------------------------------
// Phase estimation

std::int64_t PhaseEstimate::numerator() const {
  std::int64_t c = 0;
  for (const int b : bits) c = (c << 1) | b;
  return c;
}

double PhaseEstimate::value() const {
  return std::ldexp(static_cast<double>(numerator()), -static_cast<int>(bits.size()));
}

int stage_sample_count(int l, double epsilon) {
  if (l < 1 || !(epsilon > 0.0)) throw std::invalid_argument("stage_sample_count: bad arguments");
  const double per_estimate = epsilon / (2.0 * l);
  const double prefactor = 2.0 / std::sqrt(2.0 * std::numbers::pi);
  const double needed =
      std::log(prefactor / per_estimate) / (2.0 * kStagePrecision * kStagePrecision);
  const auto t = static_cast<std::uint64_t>(std::max(1.0, std::ceil(needed)));
  return static_cast<int>(std::bit_ceil(t));
}

double turns_from_p0(double p0_in_phase, double p0_quadrature) {
  const double c = 2.0 * p0_in_phase - 1.0;
  const double s = 2.0 * p0_quadrature - 1.0;
  return wrap_turns(std::atan2(s, c) / (2.0 * std::numbers::pi));
}

PhaseEstimate reconcile_stages(std::vector<StageRecord> stages, int l, double epsilon) {
  if (static_cast<int>(stages.size()) != l || l < 1) {
    throw std::invalid_argument("need exactly one stage record per bit");
  }
  PhaseEstimate est;
  est.epsilon = epsilon;
  // A correct candidate sits within delta (reading) + delta / 2 (halved
  // error of the later stage) of its reading; the wrong one is 1/2 away.
  const double tolerance = 1.5 * kStagePrecision;
  double alpha = stages[static_cast<std::size_t>(l - 1)].turns;
  stages[static_cast<std::size_t>(l - 1)].bits = two_bits(alpha);
  for (int j = l - 2; j >= 0; --j) {
    auto& st = stages[static_cast<std::size_t>(j)];
    const double low = alpha / 2.0;
    const double high = low + 0.5;
    const double d_low = circular_distance(low, st.turns);
    const double d_high = circular_distance(high, st.turns);
    alpha = d_low <= d_high ? low : high;
    st.bits = two_bits(alpha);
    if (std::min(d_low, d_high) > tolerance && !est.failure) {
      est.failure = "stage " + std::to_string(j) + " reading " + std::to_string(st.turns) +
                    " is inconsistent with the later stages";
    }
  }
  const std::int64_t scale = std::int64_t{1} << l;
  const auto c = static_cast<std::int64_t>(std::llround(alpha * static_cast<double>(scale))) % scale;
  for (int i = l - 1; i >= 0; --i) est.bits.push_back(static_cast<int>((c >> i) & 1));
  for (const auto& st : stages) est.per_stage_p0.push_back(st.p0_hat);
  est.stages = std::move(stages);
  return est;
}

// ---------------------------------------------------------------------------
// Order finding

int kitaev_bits(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("modulus must be at least 2");
  int ceil_log = 0;
  while ((std::int64_t{1} << ceil_log) < n) ++ceil_log;
  return 1 + ceil_log;
}

KitaevRun kitaev_order(std::int64_t y, std::int64_t n, Rng& rng, const KitaevOptions& opts) {
  const MultUnitary u(y, n);
  KitaevRun run;
  run.y = y;
  run.n = n;
  run.l = opts.bits > 0 ? opts.bits : kitaev_bits(n);
  if (run.l > 62) throw std::invalid_argument("too many phase bits");
  run.epsilon = opts.epsilon;
  run.t = stage_sample_count(run.l, run.epsilon);
  const auto x = init_basis(RegisterLayout({n}), {1});
  const std::int64_t scale = std::int64_t{1} << run.l;
  OrderRecovery recovery(y, n);
  for (int rep = 0; rep < opts.max_reps; ++rep) {
    auto est = estimate_phase([&u](int j) { return u.power_of_two(j); }, x, run.l, run.epsilon, rng);
    ++run.repetitions;
    run.oracle_queries += 2 * run.t * run.l;
    KitaevEstimateRecord rec{std::move(est), 0, {}};
    if (rec.estimate.ok()) {
      rec.c = rec.estimate.numerator();
      rec.fraction = best_rational(rec.c, scale, n);
    }
    const bool usable = rec.estimate.ok();
    const auto denominator = rec.fraction.r;
    run.estimates.push_back(std::move(rec));
    if (!usable) continue;
    if (auto r = recovery.offer(denominator)) {
      run.r = *r;
      return run;
    }
  }
  throw BudgetExhausted("kitaev_order: no verified order for y = " + std::to_string(y) + " mod " +
                        std::to_string(n) + " after " + std::to_string(opts.max_reps) + " estimates");
}

}  // namespace qabel
