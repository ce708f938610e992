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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qabel/common.hpp"

namespace qabel {

/// An element of a product of cyclic groups, one residue per factor.
struct GroupElement {
  std::vector<std::int64_t> residues;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Characters of Z_{n_1} x ... x Z_{n_m} are labelled by group elements:
/// the label k selects g -> exp(2 pi i sum_j k_j g_j / n_j).
struct CharacterIndex {
  GroupElement label;

  friend bool operator==(const CharacterIndex&, const CharacterIndex&) = default;
};

/// A finite Abelian group Z_{n_1} x ... x Z_{n_m}.
///
/// Elements are enumerated in mixed-radix order with residues[0] the most
/// significant digit, so for B^n the bit string x_1...x_n maps to the integer
/// whose most significant bit is x_1. Every module that indexes amplitudes by
/// group elements relies on this ordering.
class GroupSpec {
 public:
  GroupSpec(std::vector<std::int64_t> moduli, std::uint64_t max_order);

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::size_t rank() const { return moduli_.size(); }
  std::uint64_t order() const { return order_; }

  GroupElement identity() const;
  GroupElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const GroupElement& g) const;

  /// Throws std::invalid_argument unless g has this group's shape and every
  /// residue is reduced.
  void validate(const GroupElement& g) const;
  bool contains(const GroupElement& g) const;

  /// True when every factor is Z_2.
  bool is_boolean() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.moduli_ == b.moduli_;
  }

 private:
  std::vector<std::int64_t> moduli_;
  std::uint64_t order_ = 1;
};

/// Validated construction; the product of moduli must not exceed `max_order`.
GroupSpec make_group(std::vector<std::int64_t> moduli,
                     std::uint64_t max_order = limits::kDefaultMaxGroupOrder);

/// B^n = Z_2^n.
GroupSpec boolean_group(int n);

/// Parses "n_1,...,n_m".
GroupSpec parse_group(const std::string& text,
                      std::uint64_t max_order = limits::kDefaultMaxGroupOrder);
std::string format_group(const GroupSpec& g);

GroupElement group_op(const GroupSpec& g, const GroupElement& a,
                      const GroupElement& b);
GroupElement group_inverse(const GroupSpec& g, const GroupElement& a);

/// exp(2 pi i m / n) with m reduced into [0, n) first. Quarter turns are
/// returned exactly.
std::complex<double> unit_root(std::int64_t m, std::int64_t n);

/// Phase of chi_k(g) as an integer numerator over |G|.
std::uint64_t character_phase(const GroupSpec& g, const CharacterIndex& k,
                              const GroupElement& x);

std::complex<double> character_value(const GroupSpec& g, const CharacterIndex& k,
                                     const GroupElement& x);

/// (1/|G|) sum_g chi_i(g) conj(chi_j(g)).
std::complex<double> character_inner_product(const GroupSpec& g,
                                             const CharacterIndex& i,
                                             const CharacterIndex& j);

/// (1/|G|) sum_i chi_i(x): 1 at the identity, 0 elsewhere.
std::complex<double> character_sum_at(const GroupSpec& g, const GroupElement& x);

/// A subgroup given by generators together with its enumerated elements,
/// sorted by element index.
struct Subgroup {
  std::vector<GroupElement> generators;
  std::vector<GroupElement> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(const GroupElement& x) const;
};

/// Closure of a generating set under the group operation.
Subgroup generate_subgroup(const GroupSpec& g, std::vector<GroupElement> gens);

/// True when `elements` contains the identity and is closed under group_op.
bool is_closed_subgroup(const GroupSpec& g, std::span<const GroupElement> elements);

/// An explicit function G -> {0, 1, 2, ...}, one value per element in index
/// order.
class TruthTable {
 public:
  TruthTable(GroupSpec group, std::vector<std::uint64_t> values);

  const GroupSpec& group() const { return group_; }
  const std::vector<std::uint64_t>& values() const { return values_; }
  std::uint64_t at(std::uint64_t index) const { return values_.at(index); }
  std::uint64_t operator()(const GroupElement& x) const {
    return values_[group_.index_of(x)];
  }
  /// One past the largest value.
  std::uint64_t value_bound() const;

 private:
  GroupSpec group_;
  std::vector<std::uint64_t> values_;
};

/// Text form: a `group: n_1,...,n_m` header, then one `g_1,...,g_m -> v` line
/// per element. Lines may come in any order, but all |G| must be present
/// exactly once. Blank lines and `#` comments are skipped.
TruthTable parse_truth_table(const std::string& text);
TruthTable load_truth_table(const std::string& path);
std::string format_truth_table(const TruthTable& f);

/// K = {k : f(k g) = f(g) for all g}, by exhaustive search.
Subgroup stabilizer_bruteforce(const TruthTable& f);

}  // namespace qabel
