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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qabel/algorithms.hpp"
#include "qabel/cli.hpp"
#include "qabel/fourier.hpp"
#include "qabel/kitaev.hpp"
#include "qabel/run_record.hpp"

namespace qabel {
namespace {

using C = std::complex<double>;
constexpr RegisterId kR0{0};
constexpr RegisterId kR1{1};
constexpr RegisterId kR2{2};
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Verdict {
  bool pass = true;
  std::string detail;
  void check(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

StateVector random_state(const RegisterLayout& layout, Rng& rng) {
  Amplitudes a(layout.size());
  std::normal_distribution<double> gauss;
  for (auto& v : a) v = C(gauss(rng), gauss(rng));
  return normalized_state(layout, std::move(a));
}

double max_diff(const Amplitudes& a, const Amplitudes& b) { return (a - b).cwiseAbs().maxCoeff(); }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Verdict deutsch_jozsa_exactness() {
  Verdict v;
  Rng rng(1001);
  const int n = 10;
  std::vector<TruthTable> tables{constant_table(n, 0), constant_table(n, 1)};
  for (int i = 0; i < 200; ++i) tables.push_back(random_balanced_table(n, rng));
  double worst = 0;
  for (const auto& f : tables) {
    const auto truth = classify_by_scan(f);
    const double p0 = probabilities(deutsch_jozsa_state(f), kR0)[0];
    if (truth == DeutschOutcome::kConstant) {
      worst = std::max(worst, std::abs(p0 - 1.0));
      v.check(std::abs(p0 - 1.0) <= 1e-10, "constant P(0...0) != 1");
    } else {
      worst = std::max(worst, p0);
      v.check(p0 <= 1e-10, "balanced P(0...0) > 1e-10");
    }
    const auto verdict = deutsch_jozsa(f, rng);
    v.check(verdict.outcome == truth, "wrong verdict");
    v.check(verdict.queries_used == 1, "query count != 1");
  }
  if (v.pass) v.detail = "202 functions, worst P deviation " + fmt("%.1e", worst);
  return v;
}

Verdict deutsch_xor_original_case() {
  Verdict v;
  Rng rng(1002);
  double worst = 0;
  for (auto [f0, f1] : {std::pair<std::uint64_t, std::uint64_t>{0, 0}, {1, 1}, {0, 1}, {1, 0}}) {
    const TruthTable f(boolean_group(1), {f0, f1});
    const auto truth = classify_by_scan(f);
    const auto st = deutsch_xor_state(f);
    const double p_inconclusive = probabilities(st, kR1)[0];
    worst = std::max(worst, std::abs(p_inconclusive - 0.5));
    v.check(std::abs(p_inconclusive - 0.5) <= 1e-12, "P(inconclusive) != 1/2");
    const auto conditioned = collapse_register(st, kR1, 1);
    const auto label = truth == DeutschOutcome::kConstant ? 0 : 1;
    v.check(std::abs(probabilities(conditioned, kR0)[label] - 1.0) <= 1e-12, "conditioned readout not certain");
    for (int i = 0; i < 1000; ++i) {
      const auto out = deutsch_xor_original(f, rng);
      v.check(out.outcome == DeutschOutcome::kInconclusive || out.outcome == truth, "wrong conditioned verdict");
    }
  }
  if (v.pass) v.detail = "max |P(inconclusive) - 1/2| = " + fmt("%.1e", worst);
  return v;
}

Verdict fk_identification() {
  Verdict v;
  Rng rng(1003);
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    const BitVec k = uniform_below(rng, 256);
    const auto f = linear_table(8, k);
    const double p = probabilities(deutsch_jozsa_state(f), kR0)[static_cast<Eigen::Index>(k)];
    worst = std::max(worst, std::abs(p - 1.0));
    v.check(std::abs(p - 1.0) <= 1e-10, "P(k) != 1");
    const auto id = identify_linear_fk(f, rng);
    v.check(id.k == k && id.queries_used == 1, "wrong k or query count");
  }
  if (v.pass) v.detail = "50 labels, max |P(k) - 1| = " + fmt("%.1e", worst);
  return v;
}

Verdict simon_recovery() {
  Verdict v;
  std::string per_n;
  for (int n = 3; n <= 8; ++n) {
    Rng pick(2000 + static_cast<std::uint64_t>(n));
    int successes = 0, runs = 0;
    for (int i = 0; i < 20; ++i) {
      const BitVec xi = 1 + uniform_below(pick, (BitVec{1} << n) - 1);
      const auto inst = make_simon_instance(n, xi);
      for (int s = 0; s < 5; ++s) {
        Rng rng(static_cast<std::uint64_t>(n * 1000 + i * 10 + s));
        ++runs;
        try {
          const auto res = simon_solve(inst, rng, default_simon_max_samples(n));
          for (const auto y : res.samples) v.check(dot(y, xi) == 0, "sample with y.xi != 0");
          successes += res.xi == xi;
          v.check(res.xi == xi, "solver returned a wrong xi");
        } catch (const BudgetExhausted&) {
        }
      }
    }
    v.check(successes >= 99, "n=" + std::to_string(n) + ": " + std::to_string(successes) + "/100");
    per_n += " n" + std::to_string(n) + "=" + std::to_string(successes) + "/" + std::to_string(runs);
  }
  v.detail = v.pass ? "successes" + per_n : v.detail + ";" + per_n;
  return v;
}

Verdict shor_exact_multiple() {
  Verdict v;
  const auto p = shor_output_distribution(7, 15, 16);
  double worst = 0;
  for (std::int64_t c = 0; c < 16; ++c) worst = std::max(worst, std::abs(p[c] - (c % 4 == 0 ? 0.25 : 0.0)));
  v.check(worst <= 1e-10, "deviation " + fmt("%.1e", worst));
  if (v.pass) v.detail = "max deviation " + fmt("%.1e", worst);
  return v;
}

Verdict shor_general() {
  Verdict v;
  v.check(shor_register_size(21) == 512, "q != 512");
  int found = 0, max_used = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(3000 + seed);
    try {
      const auto run = shor_order(2, 21, rng, 64);
      v.check(run.q == 512, "auto q != 512");
      found += run.r == order_bruteforce(2, 21);
      max_used = std::max(max_used, run.repetitions);
    } catch (const BudgetExhausted&) {
    }
  }
  v.check(found == 100, std::to_string(found) + "/100 runs returned 6");
  int divisors = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(3500 + seed);
    const auto d = factor(21, OrderMethod::kShor, rng).divisor;
    v.check(d == 3 || d == 7, "factor(21) returned " + std::to_string(d));
    ++divisors;
  }
  if (v.pass) {
    v.detail = "100/100 runs returned 6 (max " + std::to_string(max_used) + " samples); factor(21) ok in " +
               std::to_string(divisors) + " runs";
  }
  return v;
}

std::vector<GroupSpec> fourier_groups() {
  return {make_group({2}),       make_group({3}),        make_group({4}),        make_group({2, 2}),
          make_group({6}),       make_group({2, 3}),     make_group({7}),        make_group({2, 2, 2}),
          make_group({3, 3}),    make_group({12}),       make_group({15}),       make_group({4, 4}),
          make_group({16}),      make_group({3, 5, 2}),  make_group({5, 7}),     make_group({64}),
          make_group({2, 2, 2, 2, 2, 2}), make_group({100}), make_group({2, 3, 4, 5}), make_group({127}),
          make_group({256}),     make_group({12, 21}),   make_group({2, 2, 2, 2, 2, 2, 2, 2, 2}),
          make_group({509}),     make_group({512})};
}

Verdict fourier_correctness() {
  Verdict v;
  Rng rng(4000);
  double unit = 0, fast = 0, self_inv = 0, shift = 0;
  for (const auto& g : fourier_groups()) {
    const auto f = ft_matrix(g);
    unit = std::max(unit, unitarity_defect(f.entries));
    const RegisterLayout layout({static_cast<std::int64_t>(g.order())});
    for (int i = 0; i < 100; ++i) {
      const auto s = random_state(layout, rng);
      fast = std::max(fast, max_diff(apply_ft(g, s, kR0).amplitudes(), (f.entries * s.amplitudes()).eval()));
    }
    if (g.order() <= 64) {
      for (std::uint64_t i = 0; i < g.order(); ++i) {
        const CharacterIndex k{g.element_at(i)};
        const auto chi = fourier_basis_state(g, k);
        for (int trial = 0; trial < 20; ++trial) {
          const auto h = g.element_at(uniform_below(rng, g.order()));
          const Amplitudes expect = character_value(g, k, h) * chi.amplitudes();
          shift = std::max(shift, max_diff(shift_operator(g, h, chi, kR0).amplitudes(), expect));
        }
      }
    }
  }
  for (int n = 1; n <= 9; ++n) {
    const auto s = random_state(RegisterLayout({std::int64_t{1} << n}), rng);
    self_inv = std::max(self_inv, max_diff(hadamard_n(hadamard_n(s, kR0), kR0).amplitudes(), s.amplitudes()));
  }
  v.check(unit <= 1e-10, "unitarity " + fmt("%.1e", unit));
  v.check(fast <= 1e-9, "fast vs dense " + fmt("%.1e", fast));
  v.check(self_inv <= 1e-10, "H_n H_n " + fmt("%.1e", self_inv));
  v.check(shift <= 1e-10, "shift invariance " + fmt("%.1e", shift));
  if (v.pass) {
    v.detail = "unitarity " + fmt("%.1e", unit) + ", fast/dense " + fmt("%.1e", fast) + ", H_n^2 " +
               fmt("%.1e", self_inv) + ", shift " + fmt("%.1e", shift);
  }
  return v;
}

Verdict character_identities() {
  Verdict v;
  double ortho = 0, sum = 0;
  for (const auto& g : fourier_groups()) {
    if (g.order() > 256) continue;
    for (std::uint64_t i = 0; i < g.order(); ++i) {
      const CharacterIndex ci{g.element_at(i)};
      for (std::uint64_t j = 0; j < g.order(); ++j) {
        const auto ip = character_inner_product(g, ci, CharacterIndex{g.element_at(j)});
        ortho = std::max(ortho, std::abs(ip - (i == j ? 1.0 : 0.0)));
      }
      sum = std::max(sum, std::abs(character_sum_at(g, g.element_at(i)) - (i == 0 ? 1.0 : 0.0)));
    }
  }
  v.check(ortho <= 1e-12, "orthogonality " + fmt("%.1e", ortho));
  v.check(sum <= 1e-12, "character sum " + fmt("%.1e", sum));
  if (v.pass) v.detail = "orthogonality " + fmt("%.1e", ortho) + ", character sum " + fmt("%.1e", sum);
  return v;
}

Verdict kitaev_structure() {
  Verdict v;
  Rng rng(5000);
  double eig = 0, recon = 0, gadget = 0, entropy = 0;
  for (auto [y, n] : {std::pair<std::int64_t, std::int64_t>{7, 15}, {2, 21}, {5, 33}}) {
    const auto r = order_bruteforce(y, n);
    const auto u = mult_unitary(y, n);
    Amplitudes total = Amplitudes::Zero(n);
    for (std::int64_t k = 0; k < r; ++k) {
      const auto lam = eigenstate_lambda_k(y, n, r, k);
      const Amplitudes expect = std::polar(1.0, -kTwoPi * k / r) * lam.amplitudes();
      eig = std::max(eig, max_diff(u.apply(lam, kR0).amplitudes(), expect));
      total += lam.amplitudes();
    }
    total /= std::sqrt(static_cast<double>(r));
    recon = std::max(recon, max_diff(total, init_basis(RegisterLayout({n}), {1}).amplitudes()));

    const auto dim = static_cast<std::int64_t>(std::bit_ceil(static_cast<std::uint64_t>(n)));
    Eigen::MatrixXcd direct = Eigen::MatrixXcd::Zero(2 * dim, 2 * dim);
    direct.topLeftCorner(dim, dim) = Eigen::MatrixXcd::Identity(dim, dim);
    direct.bottomRightCorner(dim, dim) = u.matrix(dim);
    for (int trial = 0; trial < 100; ++trial) {
      const auto cx = random_state(RegisterLayout{2, dim}, rng);
      Amplitudes padded = Amplitudes::Zero(2 * dim * dim);
      for (std::int64_t i = 0; i < 2 * dim; ++i) padded[i * dim] = cx.amplitudes()[i];
      const auto out = controlled_u_gadget(u, StateVector(RegisterLayout{2, dim, dim}, padded), kR0, kR1, kR2);
      Amplitudes reduced(2 * dim);
      for (std::int64_t i = 0; i < 2 * dim; ++i) reduced[i] = out.amplitudes()[i * dim];
      gadget = std::max(gadget, max_diff(reduced, (direct * cx.amplitudes()).eval()));
      gadget = std::max(gadget, 1.0 - probabilities(out, kR2)[0]);
      entropy = std::max(entropy, entanglement_entropy(out, kR2));
    }
  }
  v.check(eig <= 1e-12, "eigen-relation " + fmt("%.1e", eig));
  v.check(recon <= 1e-12, "reconstruction " + fmt("%.1e", recon));
  v.check(gadget <= 1e-12, "gadget " + fmt("%.1e", gadget));
  v.check(entropy <= 1e-12, "ancilla entropy " + fmt("%.1e", entropy));
  if (v.pass) {
    v.detail = "eigen " + fmt("%.1e", eig) + ", reconstruction " + fmt("%.1e", recon) + ", gadget " +
               fmt("%.1e", gadget) + ", Y entropy " + fmt("%.1e", entropy);
  }
  return v;
}

Verdict kitaev_end_to_end() {
  Verdict v;
  std::string worst_case;
  double worst_rate = 2.0;
  for (std::int64_t n : {15, 21, 33}) {
    for (std::int64_t y = 1; y < n; ++y) {
      if (gcd(y, n) != 1) continue;
      const auto truth = order_bruteforce(y, n);
      int ok = 0;
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(static_cast<std::uint64_t>(n * 100000 + y * 1000) + seed);
        KitaevOptions opts;
        opts.epsilon = 0.05;
        opts.bits = 1 + static_cast<int>(std::ceil(std::log2(static_cast<double>(n))));
        try {
          ok += kitaev_order(y, n, rng, opts).r == truth;
        } catch (const BudgetExhausted&) {
        }
      }
      const double rate = ok / 100.0;
      if (rate < worst_rate) {
        worst_rate = rate;
        worst_case = "(" + std::to_string(y) + "," + std::to_string(n) + ")";
      }
      v.check(ok >= 95, "(y,N)=(" + std::to_string(y) + "," + std::to_string(n) + "): " + std::to_string(ok) + "/100");
    }
  }
  for (std::int64_t n : {15, 21}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Rng rng(6000 + seed);
      const auto d = factor(n, OrderMethod::kKitaev, rng).divisor;
      v.check(d > 1 && d < n && n % d == 0, "factor(" + std::to_string(n) + ", kitaev) returned " + std::to_string(d));
    }
  }
  if (v.pass) v.detail = "lowest success rate " + fmt("%.2f", worst_rate) + " at " + worst_case;
  return v;
}

Verdict collapse_first() {
  Verdict v;
  double worst = 0;
  const auto one = init_basis(RegisterLayout({15}), {1});
  for (std::int64_t y = 1; y < 15; ++y) {
    if (gcd(y, 15) != 1) continue;
    const MultUnitary u(y, 15);
    for (int t = 1; t <= 3; ++t) {
      for (auto basis : {ProcBasis::kInPhase, ProcBasis::kQuadrature}) {
        const auto full = proc_joint_distribution_full(u, one, t, basis);
        const auto fast = proc_joint_distribution_collapse_first(u, one, t, basis);
        worst = std::max(worst, 0.5 * (full - fast).cwiseAbs().sum());
      }
    }
  }
  v.check(worst <= 1e-10, "TV " + fmt("%.1e", worst));
  if (v.pass) v.detail = "max total variation " + fmt("%.1e", worst);
  return v;
}

Verdict cli_determinism() {
  Verdict v;
  const std::vector<std::vector<std::string>> commands = {
      {"deutsch-xor", "--kind", "negation", "--seed", "11"},
      {"deutsch-jozsa", "--n", "8", "--seed", "11"},
      {"identify-fk", "--k", "10110011", "--seed", "11"},
      {"simon", "--n", "7", "--xi", "1010011", "--seed", "11", "--trials", "3"},
      {"shor", "--N", "33", "--y", "5", "--seed", "11"},
      {"kitaev", "--N", "21", "--y", "2", "--seed", "11"},
      {"factor", "--N", "15", "--method", "kitaev", "--seed", "7"},
      {"factor", "--N", "21", "--method", "shor", "--seed", "11"},
      {"ft-dump", "--group", "2,3"},
  };
  for (auto cmd : commands) {
    cmd.push_back("--json");
    std::ostringstream a, b, err;
    const int ca = run_cli(cmd, a, err);
    const int cb = run_cli(cmd, b, err);
    v.check(ca == 0 && cb == 0, cmd[0] + " exited nonzero: " + err.str());
    if (ca != 0 || cb != 0) continue;
    const auto ja = strip_timing(Json::parse(a.str())).dump();
    const auto jb = strip_timing(Json::parse(b.str())).dump();
    v.check(ja == jb, cmd[0] + " output differs between runs");
  }
  if (v.pass) v.detail = std::to_string(commands.size()) + " commands byte-identical";
  return v;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0 = no runtime limit
  std::function<Verdict()> run;
};

}  // namespace
}  // namespace qabel

int main() {
  using namespace qabel;
  const std::vector<Criterion> criteria = {
      {1, "Deutsch-Jozsa exactness", 10, deutsch_jozsa_exactness},
      {2, "original XOR", 0, deutsch_xor_original_case},
      {3, "f_k identification", 0, fk_identification},
      {4, "Simon", 60, simon_recovery},
      {5, "Shor exact multiple", 0, shor_exact_multiple},
      {6, "Shor general case", 120, shor_general},
      {7, "Fourier correctness", 0, fourier_correctness},
      {8, "character identities", 0, character_identities},
      {9, "Kitaev structure", 0, kitaev_structure},
      {10, "Kitaev end-to-end", 300, kitaev_end_to_end},
      {11, "collapse-first vs full PROC", 0, collapse_first},
      {12, "CLI determinism", 0, cli_determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      v.pass = false;
      v.detail += " (runtime " + fmt("%.1f", secs) + " s over " + fmt("%.0f", c.limit_s) + " s)";
    }
    failures += !v.pass;
    std::printf("criterion %2d %s: %s - %s [%.2f s]\n", c.id, v.pass ? "PASS" : "FAIL", c.name, v.detail.c_str(),
                secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
