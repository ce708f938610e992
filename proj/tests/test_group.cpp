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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "qabel/gf2.hpp"
#include "qabel/group.hpp"

namespace qabel {
namespace {

constexpr double kPi = std::numbers::pi;

GroupElement el(std::initializer_list<std::int64_t> r) { return GroupElement{r}; }
CharacterIndex ch(std::initializer_list<std::int64_t> r) { return CharacterIndex{GroupElement{r}}; }

std::vector<GroupSpec> small_groups() {
  return {make_group({2}),       make_group({3}),    make_group({4}),       make_group({2, 2}),
          make_group({2, 3}),    make_group({6}),    make_group({5, 7}),    make_group({2, 2, 2}),
          make_group({4, 2}),    make_group({16}),   make_group({3, 3, 3}), make_group({2, 2, 2, 2, 2}),
          make_group({12, 10}),  make_group({256}),  make_group({2, 4, 8, 4})};
}

TEST(MakeGroup, OrderIsProductOfModuli) {
  EXPECT_EQ(make_group({2, 2, 2}).order(), 8u);
  EXPECT_TRUE(make_group({2, 2, 2}).is_boolean());
  EXPECT_EQ(make_group({16}).order(), 16u);
  EXPECT_FALSE(make_group({16}).is_boolean());
}

TEST(MakeGroup, RejectsBadModuli) {
  EXPECT_THROW(make_group({2, 1}), std::invalid_argument);
  EXPECT_THROW(make_group({}), std::invalid_argument);
  EXPECT_THROW(make_group({0}), std::invalid_argument);
  EXPECT_THROW(make_group({1 << 11, 1 << 10}), std::invalid_argument);
  EXPECT_NO_THROW(make_group({1 << 10, 1 << 10}));
  EXPECT_THROW(make_group({64}, 32), std::invalid_argument);
}

TEST(ParseGroup, RoundTrip) {
  const auto g = parse_group("2, 3,4");
  EXPECT_EQ(g.moduli(), (std::vector<std::int64_t>{2, 3, 4}));
  EXPECT_EQ(format_group(g), "2,3,4");
  EXPECT_THROW(parse_group(""), std::invalid_argument);
  EXPECT_THROW(parse_group("2,,3"), std::invalid_argument);
  EXPECT_THROW(parse_group("2,x"), std::invalid_argument);
}

TEST(GroupElements, MixedRadixOrderFirstResidueMostSignificant) {
  const auto b3 = boolean_group(3);
  EXPECT_EQ(b3.index_of(el({1, 1, 0})), 6u);
  EXPECT_EQ(b3.element_at(6), el({1, 1, 0}));
  EXPECT_EQ(parse_bits("110"), 6u);
  const auto g = make_group({3, 4});
  EXPECT_EQ(g.index_of(el({2, 1})), 9u);
  for (std::uint64_t i = 0; i < g.order(); ++i) EXPECT_EQ(g.index_of(g.element_at(i)), i);
}

TEST(GroupElements, ValidateRejectsWrongShapeOrUnreducedResidue) {
  const auto g = make_group({3, 4});
  EXPECT_THROW(g.validate(el({1})), std::invalid_argument);
  EXPECT_THROW(g.validate(el({3, 0})), std::invalid_argument);
  EXPECT_THROW(g.validate(el({0, -1})), std::invalid_argument);
  EXPECT_FALSE(g.contains(el({0, 4})));
  EXPECT_TRUE(g.contains(el({2, 3})));
}

TEST(GroupOp, Examples) {
  const auto b3 = boolean_group(3);
  EXPECT_EQ(group_op(b3, el({1, 1, 0}), el({0, 1, 1})), el({1, 0, 1}));
  const auto z16 = make_group({16});
  EXPECT_EQ(group_op(z16, el({9}), el({12})), el({5}));
  for (const auto& g : small_groups()) {
    if (g.order() > 64) continue;
    for (std::uint64_t i = 0; i < g.order(); ++i) {
      const auto a = g.element_at(i);
      EXPECT_EQ(group_op(g, a, g.identity()), a);
      EXPECT_EQ(group_op(g, a, group_inverse(g, a)), g.identity());
    }
  }
  EXPECT_THROW(group_op(b3, el({1, 1}), el({0, 1, 1})), std::invalid_argument);
}

TEST(GroupOp, AssociativeAndCommutative) {
  const auto g = make_group({4, 6});
  for (std::uint64_t i = 0; i < g.order(); i += 3) {
    for (std::uint64_t j = 0; j < g.order(); j += 5) {
      for (std::uint64_t k = 0; k < g.order(); k += 7) {
        const auto a = g.element_at(i), b = g.element_at(j), c = g.element_at(k);
        EXPECT_EQ(group_op(g, a, b), group_op(g, b, a));
        EXPECT_EQ(group_op(g, group_op(g, a, b), c), group_op(g, a, group_op(g, b, c)));
      }
    }
  }
}

TEST(UnitRoot, QuarterTurnsAreExact) {
  EXPECT_EQ(unit_root(1, 4), std::complex<double>(0, 1));
  EXPECT_EQ(unit_root(2, 4), std::complex<double>(-1, 0));
  EXPECT_EQ(unit_root(-1, 4), std::complex<double>(0, -1));
  EXPECT_EQ(unit_root(8, 8), std::complex<double>(1, 0));
  EXPECT_NEAR(std::abs(unit_root(1, 3) - std::polar(1.0, 2 * kPi / 3)), 0.0, 1e-15);
}

TEST(CharacterValue, Examples) {
  EXPECT_EQ(character_value(make_group({4}), ch({1}), el({1})), std::complex<double>(0, 1));
  const auto b4 = boolean_group(4);
  for (std::uint64_t s = 0; s < 16; ++s) {
    for (std::uint64_t x = 0; x < 16; ++x) {
      const double expect = dot(s, x) ? -1.0 : 1.0;
      const auto v = character_value(b4, CharacterIndex{b4.element_at(s)}, b4.element_at(x));
      EXPECT_EQ(v, std::complex<double>(expect, 0.0));
    }
  }
  for (const auto& g : small_groups()) {
    for (std::uint64_t x = 0; x < g.order(); x += 1 + g.order() / 17) {
      EXPECT_EQ(character_value(g, CharacterIndex{g.identity()}, g.element_at(x)),
                std::complex<double>(1, 0));
    }
  }
}

TEST(CharacterValue, PhaseIsExactNumeratorOverOrder) {
  const auto g = make_group({4, 6});
  // k = (1, 1), x = (1, 1): 1/4 + 1/6 = 10/24.
  EXPECT_EQ(character_phase(g, ch({1, 1}), el({1, 1})), 10u);
}

TEST(CharacterValue, HomomorphismAndRootOfUnity) {
  for (const auto& g : small_groups()) {
    const auto n = g.order();
    for (std::uint64_t ki = 0; ki < n; ki += 1 + n / 11) {
      const CharacterIndex k{g.element_at(ki)};
      for (std::uint64_t a = 0; a < n; a += 1 + n / 13) {
        for (std::uint64_t b = 0; b < n; b += 1 + n / 7) {
          const auto ga = g.element_at(a), gb = g.element_at(b);
          const auto lhs = character_value(g, k, group_op(g, ga, gb));
          const auto rhs = character_value(g, k, ga) * character_value(g, k, gb);
          EXPECT_LE(std::abs(lhs - rhs), 1e-12);
        }
        const auto v = character_value(g, k, g.element_at(a));
        EXPECT_NEAR(std::abs(v), 1.0, 1e-10);
        EXPECT_LE(std::abs(std::pow(v, static_cast<double>(n)) - 1.0), 1e-10);
      }
    }
  }
}

TEST(CharacterInnerProduct, Examples) {
  const auto z2 = make_group({2});
  EXPECT_LE(std::abs(character_inner_product(z2, ch({1}), ch({0}))), 1e-15);
  EXPECT_NEAR(character_inner_product(z2, ch({1}), ch({1})).real(), 1.0, 1e-15);
}

TEST(CharacterInnerProduct, GramMatrixIsIdentity) {
  for (const auto& g : small_groups()) {
    if (g.order() > 64) continue;
    for (std::uint64_t i = 0; i < g.order(); ++i) {
      for (std::uint64_t j = 0; j < g.order(); ++j) {
        const auto v =
            character_inner_product(g, CharacterIndex{g.element_at(i)}, CharacterIndex{g.element_at(j)});
        EXPECT_LE(std::abs(v - (i == j ? 1.0 : 0.0)), 1e-10) << format_group(g) << " " << i << "," << j;
      }
    }
  }
}

TEST(CharacterSum, DeltaAtIdentity) {
  const auto z3 = make_group({3});
  EXPECT_LE(std::abs(character_sum_at(z3, el({1}))), 1e-15);
  EXPECT_NEAR(character_sum_at(z3, el({0})).real(), 1.0, 1e-15);
  for (const auto& g : small_groups()) {
    for (std::uint64_t x = 0; x < g.order(); x += 1 + g.order() / 23) {
      const auto v = character_sum_at(g, g.element_at(x));
      EXPECT_LE(std::abs(v - (x == 0 ? 1.0 : 0.0)), 1e-12);
    }
  }
}

TEST(Subgroup, GeneratedClosure) {
  const auto g = make_group({12});
  const auto h = generate_subgroup(g, {el({8})});
  EXPECT_EQ(h.order(), 3u);
  EXPECT_TRUE(h.contains(el({4})));
  EXPECT_TRUE(is_closed_subgroup(g, h.elements));
  const std::vector<GroupElement> not_closed{el({0}), el({1})};
  EXPECT_FALSE(is_closed_subgroup(g, not_closed));
  const std::vector<GroupElement> no_identity{el({6})};
  EXPECT_FALSE(is_closed_subgroup(g, no_identity));
}

TEST(Stabilizer, Examples) {
  const auto b3 = boolean_group(3);
  const auto constant = TruthTable(b3, std::vector<std::uint64_t>(8, 5));
  EXPECT_EQ(stabilizer_bruteforce(constant).order(), 8u);

  std::vector<std::uint64_t> simon(8);
  for (std::uint64_t x = 0; x < 8; ++x) simon[x] = std::min(x, x ^ 6u);
  const auto k = stabilizer_bruteforce(TruthTable(b3, simon));
  ASSERT_EQ(k.order(), 2u);
  EXPECT_EQ(k.elements[0], el({0, 0, 0}));
  EXPECT_EQ(k.elements[1], el({1, 1, 0}));

  std::vector<std::uint64_t> injective(8);
  for (std::uint64_t x = 0; x < 8; ++x) injective[x] = 7 - x;
  EXPECT_EQ(stabilizer_bruteforce(TruthTable(b3, injective)).order(), 1u);
}

TEST(Stabilizer, PeriodicFunctionOnCyclicGroup) {
  const auto z12 = make_group({12});
  std::vector<std::uint64_t> v(12);
  for (std::uint64_t x = 0; x < 12; ++x) v[x] = (x % 4) * (x % 4);
  const auto k = stabilizer_bruteforce(TruthTable(z12, v));
  EXPECT_EQ(k.order(), 3u);
  EXPECT_TRUE(k.contains(el({4})));
  EXPECT_TRUE(is_closed_subgroup(z12, k.elements));
}

TEST(TruthTable, RejectsSizeMismatch) {
  EXPECT_THROW(TruthTable(boolean_group(2), {0, 1, 0}), std::invalid_argument);
}

TEST(TruthTableText, ParseAndFormatRoundTrip) {
  const std::string text =
      "# xor of two bits\n"
      "group: 2,2\n"
      "1,1 -> 0\n"
      "0,0 -> 0\n"
      "\n"
      "0,1 -> 1\n"
      "1,0 -> 1   # trailing comment\n";
  const auto f = parse_truth_table(text);
  EXPECT_EQ(f.values(), (std::vector<std::uint64_t>{0, 1, 1, 0}));
  EXPECT_EQ(f(el({1, 0})), 1u);
  const auto again = parse_truth_table(format_truth_table(f));
  EXPECT_EQ(again.values(), f.values());
  EXPECT_EQ(again.group(), f.group());
}

TEST(TruthTableText, MalformedInputIsRejected) {
  EXPECT_THROW(parse_truth_table("0 -> 1\n"), ParseError);
  EXPECT_THROW(parse_truth_table("group: 2\n0 -> 1\n"), ParseError);
  EXPECT_THROW(parse_truth_table("group: 2\n0 -> 1\n0 -> 0\n1 -> 1\n"), ParseError);
  EXPECT_THROW(parse_truth_table("group: 2\n0 -> 1\n2 -> 0\n"), ParseError);
  EXPECT_THROW(parse_truth_table("group: 2\n0 -> -1\n1 -> 0\n"), ParseError);
  EXPECT_THROW(parse_truth_table("group: 2\n0 1\n1 -> 0\n"), ParseError);
  EXPECT_THROW(parse_truth_table("group: 2,2\n0 -> 1\n"), ParseError);
  EXPECT_THROW(load_truth_table("/nonexistent/table.txt"), std::invalid_argument);
}

}  // namespace
}  // namespace qabel
