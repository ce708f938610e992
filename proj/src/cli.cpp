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

#include "qabel/cli.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "qabel/fourier.hpp"
#include "qabel/run_record.hpp"

namespace qabel {

namespace {

struct Options {
  std::uint64_t seed = 1;
  bool json = false;
  int trials = 1;
  int n = 0;
  std::string xi;
  std::string k;
  std::string kind;
  std::string oracle;
  std::int64_t big_n = 0;
  std::int64_t y = 0;
  std::int64_t q = 0;
  std::string method = "shor";
  int bits = 0;
  double epsilon = 0.05;
  int max_samples = 0;
  int max_reps = kDefaultMaxOrderReps;
  int max_attempts = kDefaultFactorAttempts;
  std::string group;
};

using Runner = std::function<RunRecord(Rng&)>;

std::string bits_of(BitVec v, int width) { return format_bits(v, width); }

BitVec parse_width_bits(const std::string& text, int width, const char* flag) {
  if (static_cast<int>(text.size()) != width) {
    throw std::invalid_argument(std::string(flag) + " must have exactly " + std::to_string(width) +
                                " bits");
  }
  return parse_bits(text);
}

TruthTable one_bit_function(const Options& o) {
  if (!o.oracle.empty()) return load_truth_table(o.oracle);
  const std::string kind = o.kind.empty() ? "identity" : o.kind;
  const auto g = boolean_group(1);
  if (kind == "constant0") return TruthTable(g, {0, 0});
  if (kind == "constant1") return TruthTable(g, {1, 1});
  if (kind == "identity") return TruthTable(g, {0, 1});
  if (kind == "negation") return TruthTable(g, {1, 0});
  throw std::invalid_argument("--kind must be constant0, constant1, identity or negation");
}

TruthTable n_bit_function(const Options& o, Rng& rng) {
  if (!o.oracle.empty()) return load_truth_table(o.oracle);
  const int n = o.n > 0 ? o.n : 3;
  const std::string kind = o.kind.empty() ? "balanced" : o.kind;
  if (kind == "constant0") return constant_table(n, 0);
  if (kind == "constant1") return constant_table(n, 1);
  if (kind == "balanced") return random_balanced_table(n, rng);
  if (kind == "linear") {
    if (o.k.empty()) throw std::invalid_argument("--kind linear needs --k");
    return linear_table(n, parse_width_bits(o.k, n, "--k"));
  }
  throw std::invalid_argument("--kind must be constant0, constant1, balanced or linear");
}

std::string table_text(const TruthTable& f) {
  std::string s;
  for (const auto v : f.values()) s += std::to_string(v);
  return s;
}

RunRecord run_deutsch_xor(const Options& o, Rng& rng) {
  const auto f = one_bit_function(o);
  RunRecord rec;
  rec.algorithm = "deutsch-xor";
  rec.parameters = {{"f", table_text(f)}};
  const auto v = deutsch_xor_original(f, rng);
  rec.samples.push_back(Json{{"second", v.measured_label < 0 ? 0 : 1},
                             {"first", v.measured_label < 0 ? Json(nullptr) : Json(v.measured_label)}});
  rec.result = to_string(v.outcome);
  rec.oracle_queries = v.queries_used;
  return rec;
}

RunRecord run_deutsch_jozsa(const Options& o, Rng& rng) {
  const auto f = n_bit_function(o, rng);
  const int n = static_cast<int>(f.group().rank());
  RunRecord rec;
  rec.algorithm = "deutsch-jozsa";
  rec.parameters = {{"n", n}, {"kind", o.oracle.empty() ? (o.kind.empty() ? "balanced" : o.kind) : "oracle"}};
  const auto v = deutsch_jozsa(f, rng);
  rec.samples.push_back(bits_json(static_cast<BitVec>(v.measured_label), n));
  rec.post_processing = {{"rule", "all zeros means constant"}};
  rec.result = to_string(v.outcome);
  rec.oracle_queries = v.queries_used;
  return rec;
}

RunRecord run_identify_fk(const Options& o, Rng& rng) {
  std::optional<TruthTable> f;
  if (!o.oracle.empty()) {
    f = load_truth_table(o.oracle);
  } else {
    if (o.k.empty()) throw std::invalid_argument("identify-fk needs --k or --oracle");
    const int n = o.n > 0 ? o.n : static_cast<int>(o.k.size());
    f = linear_table(n, parse_width_bits(o.k, n, "--k"));
  }
  const int n = static_cast<int>(f->group().rank());
  RunRecord rec;
  rec.algorithm = "identify-fk";
  rec.parameters = {{"n", n}};
  const auto id = identify_linear_fk(*f, rng);
  rec.samples.push_back(bits_json(id.k, n));
  rec.result = bits_of(id.k, n);
  rec.oracle_queries = id.queries_used;
  return rec;
}

SimonInstance simon_instance(const Options& o) {
  if (!o.oracle.empty()) {
    if (!o.xi.empty()) throw std::invalid_argument("use either --xi or --oracle, not both");
    return simon_instance_from_table(load_truth_table(o.oracle));
  }
  if (o.xi.empty()) throw std::invalid_argument("simon needs --xi or --oracle");
  const int n = o.n > 0 ? o.n : static_cast<int>(o.xi.size());
  return make_simon_instance(n, parse_width_bits(o.xi, n, "--xi"));
}

RunRecord run_simon(const Options& o, Rng& rng) {
  const auto inst = simon_instance(o);
  const int cap = o.max_samples > 0 ? o.max_samples : default_simon_max_samples(inst.n);
  RunRecord rec;
  rec.algorithm = "simon";
  rec.parameters = {{"n", inst.n}, {"max_samples", cap}};
  const auto res = simon_solve(inst, rng, cap);
  for (const auto y : res.samples) rec.samples.push_back(bits_json(y, inst.n));
  rec.post_processing = {{"rank", inst.n - 1}, {"nullspace", Json::array({bits_of(res.xi, inst.n)})}};
  rec.result = bits_of(res.xi, inst.n);
  rec.oracle_queries = res.oracle_queries;
  return rec;
}

void require_n_y(const Options& o) {
  if (o.big_n < 2) throw std::invalid_argument("--N is required and must be at least 2");
  if (o.y < 1 || o.y >= o.big_n) throw std::invalid_argument("--y must lie in [1, N)");
  if (gcd(o.y, o.big_n) != 1) {
    throw std::invalid_argument("--y " + std::to_string(o.y) + " is not coprime to --N " +
                                std::to_string(o.big_n));
  }
}

RunRecord run_shor(const Options& o, Rng& rng) {
  require_n_y(o);
  const std::optional<std::int64_t> q = o.q > 0 ? std::optional(o.q) : std::nullopt;
  RunRecord rec;
  rec.algorithm = "shor";
  const auto run = shor_order(o.y, o.big_n, rng, o.max_reps, q);
  rec.parameters = {{"N", o.big_n}, {"y", o.y}, {"q", run.q}, {"max_reps", o.max_reps}};
  for (const auto& s : run.samples) rec.samples.push_back(to_json(s));
  rec.post_processing = {{"method", "continued fractions with lcm combination"},
                         {"repetitions", run.repetitions}};
  rec.result = *run.r;
  rec.oracle_queries = run.oracle_queries;
  return rec;
}

RunRecord run_kitaev(const Options& o, Rng& rng) {
  require_n_y(o);
  KitaevOptions opts;
  opts.epsilon = o.epsilon;
  opts.bits = o.bits;
  opts.max_reps = o.max_reps;
  RunRecord rec;
  rec.algorithm = "kitaev";
  const auto run = kitaev_order(o.y, o.big_n, rng, opts);
  rec.parameters = {{"N", o.big_n}, {"y", o.y},   {"bits", run.l},
                    {"t", run.t},   {"epsilon", run.epsilon}, {"max_reps", o.max_reps}};
  for (const auto& e : run.estimates) {
    Json s = to_json(e.estimate);
    s["c"] = e.c;
    s["fraction"] = to_json(e.fraction);
    rec.samples.push_back(std::move(s));
  }
  rec.post_processing = {{"method", "continued fractions with lcm combination"},
                         {"repetitions", run.repetitions}};
  rec.result = *run.r;
  rec.oracle_queries = run.oracle_queries;
  return rec;
}

RunRecord run_factor(const Options& o, Rng& rng) {
  if (o.big_n < 4) throw std::invalid_argument("--N is required and must be at least 4");
  const auto method = parse_order_method(o.method);
  RunRecord rec;
  rec.algorithm = "factor";
  rec.parameters = {{"N", o.big_n}, {"method", to_string(method)}, {"max_attempts", o.max_attempts}};
  const auto run = factor(o.big_n, method, rng, o.max_attempts);
  for (const auto& a : run.attempts) rec.samples.push_back(to_json(a));
  rec.post_processing = {{"cofactor", o.big_n / run.divisor}};
  rec.result = run.divisor;
  rec.oracle_queries = run.oracle_queries;
  return rec;
}

std::string summary_line(const RunRecord& rec) {
  std::string line = rec.algorithm + " seed=" + std::to_string(rec.seed);
  if (!rec.error.empty()) return line + " failed: " + rec.error;
  const std::string result = rec.result.is_string() ? rec.result.get<std::string>() : rec.result.dump();
  return line + " result=" + result + " oracle_queries=" + std::to_string(rec.oracle_queries);
}

int run_trials(const std::function<RunRecord(Rng&)>& body, const Options& o, std::ostream& out) {
  if (o.trials < 1) throw std::invalid_argument("--trials must be positive");
  Json all = Json::array();
  int code = kExitOk;
  for (int i = 0; i < o.trials; ++i) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
    Rng rng(seed);
    const auto start = std::chrono::steady_clock::now();
    RunRecord rec;
    try {
      rec = body(rng);
    } catch (const BudgetExhausted& e) {
      rec = RunRecord{};
      rec.error = e.what();
      rec.result = nullptr;
      code = kExitAlgorithmFailure;
    }
    rec.seed = seed;
    rec.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    if (o.json) {
      all.push_back(to_json(rec));
    } else {
      out << summary_line(rec) << '\n';
    }
  }
  if (o.json) out << (o.trials == 1 ? all.front() : all).dump(2) << '\n';
  return code;
}

int ft_dump(const Options& o, std::ostream& out) {
  if (o.group.empty()) throw std::invalid_argument("ft-dump needs --group");
  const auto g = parse_group(o.group, limits::kDenseMaxOrder);
  const auto ft = ft_matrix(g);
  if (!o.json) {
    out << format_matrix(ft.entries);
    return kExitOk;
  }
  RunRecord rec;
  rec.algorithm = "ft-dump";
  rec.seed = o.seed;
  rec.parameters = {{"group", format_group(g)}};
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < ft.entries.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < ft.entries.cols(); ++j) {
      row.push_back(Json::array({ft.entries(i, j).real() + 0.0, ft.entries(i, j).imag() + 0.0}));
    }
    rows.push_back(std::move(row));
  }
  rec.result = std::move(rows);
  out << to_json(rec).dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulated quantum algorithms on finite Abelian groups", "qabel"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "RNG seed of the first trial");
  app.add_flag("--json", o.json, "Emit RunRecord JSON");
  app.add_option("--trials", o.trials, "Independent trials with seeds seed, seed+1, ...");
  app.fallthrough();

  auto* dx = app.add_subcommand("deutsch-xor", "Deutsch's XOR problem, original version");
  dx->add_option("--kind", o.kind, "constant0, constant1, identity or negation");
  dx->add_option("--oracle", o.oracle, "Truth-table file of f: B -> B");

  auto* dj = app.add_subcommand("deutsch-jozsa", "Constant versus balanced f: B^n -> B");
  dj->add_option("--n", o.n, "Input bits");
  dj->add_option("--kind", o.kind, "constant0, constant1, balanced or linear");
  dj->add_option("--k", o.k, "Bit string of the linear function");
  dj->add_option("--oracle", o.oracle, "Truth-table file");

  auto* fk = app.add_subcommand("identify-fk", "Identify f_k(x) = k.x with one query");
  fk->add_option("--n", o.n, "Input bits");
  fk->add_option("--k", o.k, "Hidden bit string");
  fk->add_option("--oracle", o.oracle, "Truth-table file");

  auto* si = app.add_subcommand("simon", "Simon's hidden XOR period");
  si->add_option("--n", o.n, "Input bits");
  si->add_option("--xi", o.xi, "Hidden period as a bit string");
  si->add_option("--oracle", o.oracle, "Truth-table file with the 2-to-1 promise");
  si->add_option("--max-samples", o.max_samples, "Sample cap (default 4n + 20)");

  auto* sh = app.add_subcommand("shor", "Order of y modulo N by Fourier sampling");
  sh->add_option("--N", o.big_n, "Modulus")->required();
  sh->add_option("--y", o.y, "Base coprime to N")->required();
  sh->add_option("--q", o.q, "First register size (default: least power of two >= N^2)");
  sh->add_option("--max-reps", o.max_reps, "Sample budget");

  auto* ki = app.add_subcommand("kitaev", "Order of y modulo N by eigenvalue estimation");
  ki->add_option("--N", o.big_n, "Modulus")->required();
  ki->add_option("--y", o.y, "Base coprime to N")->required();
  ki->add_option("--bits", o.bits, "Phase bits l (default 1 + ceil(log2 N))");
  ki->add_option("--epsilon", o.epsilon, "Total error budget per estimate");
  ki->add_option("--max-reps", o.max_reps, "Estimate budget");

  auto* fa = app.add_subcommand("factor", "Nontrivial divisor of N");
  fa->add_option("--N", o.big_n, "Composite odd modulus")->required();
  fa->add_option("--method", o.method, "shor or kitaev");
  fa->add_option("--max-attempts", o.max_attempts, "Random base budget");

  auto* fd = app.add_subcommand("ft-dump", "Print the Fourier matrix of a group");
  fd->add_option("--group", o.group, "Moduli n_1,...,n_m")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (fd->parsed()) return ft_dump(o, out);
    std::function<RunRecord(Rng&)> body;
    if (dx->parsed()) body = [&](Rng& r) { return run_deutsch_xor(o, r); };
    if (dj->parsed()) body = [&](Rng& r) { return run_deutsch_jozsa(o, r); };
    if (fk->parsed()) body = [&](Rng& r) { return run_identify_fk(o, r); };
    if (si->parsed()) body = [&](Rng& r) { return run_simon(o, r); };
    if (sh->parsed()) body = [&](Rng& r) { return run_shor(o, r); };
    if (ki->parsed()) body = [&](Rng& r) { return run_kitaev(o, r); };
    if (fa->parsed()) body = [&](Rng& r) { return run_factor(o, r); };
    return run_trials(body, o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitAlgorithmFailure;
  }
}

}  // namespace qabel
