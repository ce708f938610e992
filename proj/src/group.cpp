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

#include "qabel/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qabel {

namespace {

void require_same_shape(const GroupSpec& g, const GroupElement& a) {
  if (a.residues.size() != g.rank()) {
    throw std::invalid_argument("group element has " + std::to_string(a.residues.size()) +
                                " residues, group " + format_group(g) + " needs " +
                                std::to_string(g.rank()));
  }
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::int64_t> moduli, std::uint64_t max_order)
    : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
  for (const auto n : moduli_) {
    if (n < 2) {
      throw std::invalid_argument("cyclic factor modulus " + std::to_string(n) + " is below 2");
    }
    if (order_ > max_order / static_cast<std::uint64_t>(n)) {
      throw std::invalid_argument("group order exceeds the configured maximum " +
                                  std::to_string(max_order));
    }
    order_ *= static_cast<std::uint64_t>(n);
  }
}

GroupElement GroupSpec::identity() const {
  return GroupElement{std::vector<std::int64_t>(moduli_.size(), 0)};
}

GroupElement GroupSpec::element_at(std::uint64_t index) const {
  if (index >= order_) throw std::invalid_argument("element index out of range");
  GroupElement g{std::vector<std::int64_t>(moduli_.size())};
  for (std::size_t j = moduli_.size(); j-- > 0;) {
    const auto n = static_cast<std::uint64_t>(moduli_[j]);
    g.residues[j] = static_cast<std::int64_t>(index % n);
    index /= n;
  }
  return g;
}

std::uint64_t GroupSpec::index_of(const GroupElement& g) const {
  validate(g);
  std::uint64_t index = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    index = index * static_cast<std::uint64_t>(moduli_[j]) +
            static_cast<std::uint64_t>(g.residues[j]);
  }
  return index;
}

void GroupSpec::validate(const GroupElement& g) const {
  require_same_shape(*this, g);
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    if (g.residues[j] < 0 || g.residues[j] >= moduli_[j]) {
      throw std::invalid_argument("residue " + std::to_string(g.residues[j]) +
                                  " not reduced modulo " + std::to_string(moduli_[j]));
    }
  }
}

bool GroupSpec::contains(const GroupElement& g) const {
  if (g.residues.size() != moduli_.size()) return false;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    if (g.residues[j] < 0 || g.residues[j] >= moduli_[j]) return false;
  }
  return true;
}

bool GroupSpec::is_boolean() const {
  return std::all_of(moduli_.begin(), moduli_.end(), [](auto n) { return n == 2; });
}

GroupSpec make_group(std::vector<std::int64_t> moduli, std::uint64_t max_order) {
  return GroupSpec(std::move(moduli), max_order);
}

GroupSpec boolean_group(int n) {
  if (n < 1) throw std::invalid_argument("B^n needs n >= 1");
  return make_group(std::vector<std::int64_t>(static_cast<std::size_t>(n), 2),
                    limits::kFastMaxOrder);
}

GroupSpec parse_group(const std::string& text, std::uint64_t max_order) {
  std::vector<std::int64_t> moduli;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(field, &used);
    } catch (const std::exception&) {
      throw ParseError("bad group modulus '" + field + "'");
    }
    while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used]))) ++used;
    if (used != field.size()) throw ParseError("bad group modulus '" + field + "'");
    moduli.push_back(value);
  }
  if (moduli.empty()) throw ParseError("empty group description");
  return make_group(std::move(moduli), max_order);
}

std::string format_group(const GroupSpec& g) {
  std::string out;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    if (j) out += ',';
    out += std::to_string(g.moduli()[j]);
  }
  return out;
}

GroupElement group_op(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
  g.validate(a);
  g.validate(b);
  GroupElement out{std::vector<std::int64_t>(g.rank())};
  for (std::size_t j = 0; j < g.rank(); ++j) {
    out.residues[j] = (a.residues[j] + b.residues[j]) % g.moduli()[j];
  }
  return out;
}

GroupElement group_inverse(const GroupSpec& g, const GroupElement& a) {
  g.validate(a);
  GroupElement out{std::vector<std::int64_t>(g.rank())};
  for (std::size_t j = 0; j < g.rank(); ++j) {
    out.residues[j] = (g.moduli()[j] - a.residues[j]) % g.moduli()[j];
  }
  return out;
}

std::complex<double> unit_root(std::int64_t m, std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("unit_root: n must be positive");
  m %= n;
  if (m < 0) m += n;
  // Exact quarter turns.
  __extension__ using Wide = __int128;
  if ((4 * static_cast<Wide>(m)) % n == 0) {
    switch (static_cast<int>((4 * static_cast<Wide>(m)) / n)) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  // Map into (-1/2, 1/2] turns so the argument stays small.
  const double turns = (2 * m > n) ? -static_cast<double>(n - m) / static_cast<double>(n)
                                   : static_cast<double>(m) / static_cast<double>(n);
  const double angle = 2.0 * std::numbers::pi * turns;
  return {std::cos(angle), std::sin(angle)};
}

std::uint64_t character_phase(const GroupSpec& g, const CharacterIndex& k,
                              const GroupElement& x) {
  g.validate(k.label);
  g.validate(x);
  const std::uint64_t order = g.order();
  std::uint64_t phase = 0;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    const auto n = static_cast<std::uint64_t>(g.moduli()[j]);
    const auto kx = (static_cast<std::uint64_t>(k.label.residues[j]) *
                     static_cast<std::uint64_t>(x.residues[j])) % n;
    phase = (phase + kx * (order / n)) % order;
  }
  return phase;
}

std::complex<double> character_value(const GroupSpec& g, const CharacterIndex& k,
                                     const GroupElement& x) {
  return unit_root(static_cast<std::int64_t>(character_phase(g, k, x)),
                   static_cast<std::int64_t>(g.order()));
}

std::complex<double> character_inner_product(const GroupSpec& g, const CharacterIndex& i,
                                             const CharacterIndex& j) {
  std::complex<double> sum{0.0, 0.0};
  for (std::uint64_t idx = 0; idx < g.order(); ++idx) {
    const auto x = g.element_at(idx);
    sum += character_value(g, i, x) * std::conj(character_value(g, j, x));
  }
  return sum / static_cast<double>(g.order());
}

std::complex<double> character_sum_at(const GroupSpec& g, const GroupElement& x) {
  std::complex<double> sum{0.0, 0.0};
  for (std::uint64_t idx = 0; idx < g.order(); ++idx) {
    sum += character_value(g, CharacterIndex{g.element_at(idx)}, x);
  }
  return sum / static_cast<double>(g.order());
}

bool Subgroup::contains(const GroupElement& x) const {
  return std::find(elements.begin(), elements.end(), x) != elements.end();
}

Subgroup generate_subgroup(const GroupSpec& g, std::vector<GroupElement> gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::uint64_t> members{0};
  seen[0] = 1;
  for (const auto& gen : gens) g.validate(gen);
  for (std::size_t cursor = 0; cursor < members.size(); ++cursor) {
    const auto current = g.element_at(members[cursor]);
    for (const auto& gen : gens) {
      const auto next = g.index_of(group_op(g, current, gen));
      if (!seen[next]) {
        seen[next] = 1;
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  Subgroup out;
  out.generators = std::move(gens);
  out.elements.reserve(members.size());
  for (const auto idx : members) out.elements.push_back(g.element_at(idx));
  return out;
}

bool is_closed_subgroup(const GroupSpec& g, std::span<const GroupElement> elements) {
  std::vector<char> member(g.order(), 0);
  for (const auto& x : elements) member[g.index_of(x)] = 1;
  if (!member[0]) return false;
  for (const auto& a : elements) {
    for (const auto& b : elements) {
      if (!member[g.index_of(group_op(g, a, b))]) return false;
    }
  }
  return true;
}

Subgroup stabilizer_bruteforce(const TruthTable& f) {
  const auto& g = f.group();
  std::vector<GroupElement> stabilizer;
  for (std::uint64_t k = 0; k < g.order(); ++k) {
    const auto shift = g.element_at(k);
    bool fixes = true;
    for (std::uint64_t x = 0; x < g.order() && fixes; ++x) {
      const auto shifted = g.index_of(group_op(g, shift, g.element_at(x)));
      fixes = f.at(shifted) == f.at(x);
    }
    if (fixes) stabilizer.push_back(shift);
  }
  if (!is_closed_subgroup(g, stabilizer)) {
    throw std::logic_error("stabilizer_bruteforce: result is not a subgroup");
  }
  // Greedy generating set: keep each element not already generated.
  std::vector<GroupElement> gens;
  Subgroup span = generate_subgroup(g, {});
  for (const auto& k : stabilizer) {
    if (!span.contains(k)) {
      gens.push_back(k);
      span = generate_subgroup(g, gens);
    }
  }
  span.elements = std::move(stabilizer);
  return span;
}

}  // namespace qabel
