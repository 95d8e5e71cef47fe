// Copyright 2026 The supchar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <set>

#include "supchar/error.hpp"
#include "supchar/triangular.hpp"

using namespace supchar;

namespace {

BasicSubset subset(std::initializer_list<Root> roots) { return BasicSubset{std::vector<Root>(roots)}; }

TEST(Triangular, MatrixUnitIndexIsABijection) {
  for (std::uint32_t n = 2; n <= 6; ++n) {
    std::set<std::uint32_t> seen;
    for (std::uint32_t i = 1; i <= n; ++i)
      for (std::uint32_t j = i; j <= n; ++j) EXPECT_TRUE(seen.insert(matrix_unit_index(n, i, j)).second);
    EXPECT_EQ(seen.size(), n * (n + 1) / 2);
    EXPECT_EQ(*seen.rbegin(), n * (n + 1) / 2 - 1);
  }
}

TEST(Triangular, BasicSubsetsAreCountedByBellNumbers) {
  const std::vector<std::size_t> bell{2, 5, 15, 52, 203};
  for (std::uint32_t n = 2; n <= 6; ++n) EXPECT_EQ(basic_subsets(n).size(), bell[n - 2]);
}

TEST(Triangular, SubsetOrdering) {
  const auto subsets = basic_subsets(3);
  ASSERT_EQ(subsets.size(), 5u);
  EXPECT_TRUE(subsets[0].roots.empty());
  EXPECT_EQ(subsets[1].roots, (std::vector<Root>{{1, 2}}));
  EXPECT_EQ(subsets[2].roots, (std::vector<Root>{{1, 3}}));
  EXPECT_EQ(subsets[3].roots, (std::vector<Root>{{2, 3}}));
  EXPECT_EQ(subsets[4].roots, (std::vector<Root>{{1, 2}, {2, 3}}));
}

TEST(Triangular, LabelCounts) {
  EXPECT_EQ(triangular_label_count(2, 2), 2u);
  EXPECT_EQ(triangular_label_count(2, 3), 5u);
  EXPECT_EQ(triangular_label_count(3, 2), 5u);
  EXPECT_EQ(triangular_label_count(3, 3), 15u);
  EXPECT_EQ(triangular_label_count(2, 4), 10u);
  for (std::uint32_t n = 2; n <= 4; ++n)
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const auto labels = triangular_labels(n, *field_make(p, 1));
      EXPECT_EQ(labels.classes.size(), triangular_label_count(n, p));
      EXPECT_EQ(labels.characters.size(), triangular_label_count(n, p));
    }
}

TEST(Triangular, LabelStringsAndOrder) {
  const auto labels = triangular_labels(3, *field_make(3, 1));
  EXPECT_EQ(label_string(labels.classes.front()), "h=[1,1,1];D'={}");
  EXPECT_EQ(label_string(labels.classes[1]), "h=[1,1,2];D'={}");
  EXPECT_EQ(label_string(labels.classes.back()), "h=[1,1,1];D'={(1,2),(2,3)}");
  EXPECT_EQ(label_string(labels.characters.front()), "c=[0,0,0];D={}");
  EXPECT_EQ(label_string(labels.characters[1]), "c=[0,0,1];D={}");
  EXPECT_EQ(label_string(TriSuperclassLabel{{FieldElement{1}, FieldElement{2}, FieldElement{1}}, subset({{1, 2}})}),
            "h=[1,2,1];D'={(1,2)}");
  EXPECT_EQ(label_string(TriSupercharLabel{{0, 0, 1}, subset({{1, 2}})}), "c=[0,0,1];D={(1,2)}");
}

TEST(Triangular, RegularityAndChains) {
  EXPECT_TRUE(is_regular_d(subset({{1, 2}, {2, 3}}), 3));
  EXPECT_FALSE(is_regular_d(subset({{1, 3}}), 3));
  EXPECT_TRUE(is_regular_d(subset({{1, 3}, {2, 4}}), 4));
  EXPECT_TRUE(is_chained(subset({{1, 2}, {2, 3}})));
  EXPECT_FALSE(is_chained(subset({{1, 3}, {2, 4}})));
  EXPECT_FALSE(is_chained(subset({})));
}

TEST(Triangular, DeltaFactors) {
  const std::vector<FieldElement> ones(4, FieldElement{1});
  // (1,2) in D' lies in Delta'((1,4)); (3,4) lies in Delta''((1,4)).
  auto d = delta_factors(subset({{1, 4}}), ones, subset({{1, 2}}));
  EXPECT_EQ(d.dprime, 0);
  EXPECT_EQ(d.ddouble, 1);
  d = delta_factors(subset({{1, 4}}), ones, subset({{3, 4}}));
  EXPECT_EQ(d.dprime, 1);
  EXPECT_EQ(d.ddouble, 0);
  d = delta_factors(subset({{1, 4}}), ones, subset({{2, 3}}));
  EXPECT_EQ(d.dprime * d.ddouble * d.dzero, 1);
  auto h = ones;
  h[0] = FieldElement{2};
  EXPECT_EQ(delta_factors(subset({{1, 4}}), h, subset({})).dzero, 0);
  EXPECT_EQ(delta_factors(subset({{2, 4}}), h, subset({})).dzero, 1);
}

TEST(Triangular, MAndS) {
  const auto f = field_make(3, 1);
  const std::vector<FieldElement> ones(4, FieldElement{1});
  // Window of (1,4) is rows/cols 2..3 of g - 1.
  auto ms = m_and_s(*f, subset({{1, 4}}), ones, subset({}));
  EXPECT_EQ(ms.m, 2u);
  EXPECT_EQ(ms.s, 2u);
  ms = m_and_s(*f, subset({{1, 4}}), ones, subset({{2, 3}}));
  EXPECT_EQ(ms.m, 1u);
  auto h = ones;
  h[1] = FieldElement{2};
  ms = m_and_s(*f, subset({{1, 4}}), h, subset({}));
  EXPECT_EQ(ms.m, 1u);
  ms = m_and_s(*f, subset({{1, 4}}), ones, subset({{1, 4}}));
  EXPECT_EQ(ms.s, 1u);
  // Chained: three touched indices, not four.
  EXPECT_EQ(m_and_s(*f, subset({{1, 2}, {2, 3}}), ones, subset({})).s, 3u);
  EXPECT_EQ(m_and_s(*f, subset({{1, 2}, {2, 3}}), ones, subset({}), TorusExponent::kLiteral).s, 4u);
}

TEST(Triangular, GroupOrder) {
  EXPECT_EQ(triangular_group_order(2, 3), 12u);
  EXPECT_EQ(triangular_group_order(3, 3), 216u);
  EXPECT_EQ(triangular_group_order(9, 3), 0u);  // overflow
}

struct Config {
  std::uint32_t n, p, k;
};
class ClosedVsBrute : public ::testing::TestWithParam<Config> {};

TEST_P(ClosedVsBrute, IdenticalTables) {
  const auto c = GetParam();
  const auto field = field_make(c.p, c.k);
  const auto closed = closed_form_table(c.n, field);
  const auto bf = brute_force(c.n, field);
  const auto diffs = compare_tables(closed, bf.table);
  EXPECT_TRUE(diffs.empty()) << diffs.front();
  EXPECT_EQ(closed.sizes, bf.table.sizes);
  EXPECT_EQ(closed.row_labels, bf.table.row_labels);
}

INSTANTIATE_TEST_SUITE_P(Small, ClosedVsBrute,
                         ::testing::Values(Config{2, 2, 1}, Config{2, 3, 1}, Config{2, 2, 2}, Config{3, 2, 1},
                                           Config{3, 3, 1}, Config{2, 5, 1}, Config{3, 2, 2}),
                         [](const auto& info) {
                           return "n" + std::to_string(info.param.n) + "_p" + std::to_string(info.param.p) + "_k" +
                                  std::to_string(info.param.k);
                         });

TEST(Triangular, LiteralExponentDiffersOnlyOnChainedSubsets) {
  const auto field = field_make(3, 1);
  TriangularOptions literal;
  literal.exponent = TorusExponent::kLiteral;
  const auto path_table = closed_form_table(3, field);
  const auto lit_table = closed_form_table(3, field, literal);
  const auto labels = triangular_labels(3, *field);
  std::size_t differing = 0;
  for (std::size_t r = 0; r < labels.characters.size(); ++r)
    for (std::size_t c = 0; c < labels.classes.size(); ++c) {
      const bool differs = !(path_table.values[r][c] == lit_table.values[r][c]);
      differing += differs;
      if (differs) {
        EXPECT_TRUE(is_chained(labels.characters[r].d)) << label_string(labels.characters[r]);
      }
    }
  EXPECT_GT(differing, 0u);
}

TEST(Triangular, Errors) {
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kMalformedSpec;
  };
  EXPECT_EQ(code_of([] { make_triangular(1, field_make(2, 1)); }), ErrorCode::kBadSize);
  EXPECT_EQ(code_of([] { basic_subsets(1); }), ErrorCode::kBadSize);
  EXPECT_EQ(code_of([] { brute_force(9, field_make(3, 1)); }), ErrorCode::kGroupTooLarge);
  EXPECT_EQ(code_of([] { closed_form_table(9, field_make(3, 1)); }), ErrorCode::kTableTooLarge);
  TriangularOptions small;
  small.group_bound = 4;
  EXPECT_EQ(code_of([&] { brute_force(3, field_make(2, 1), small); }), ErrorCode::kGroupTooLarge);
}

TEST(Triangular, GeneralLabelMapping) {
  const auto bf = brute_force(3, field_make(3, 1));
  std::set<std::uint32_t> rows(bf.row_of.begin(), bf.row_of.end());
  std::set<std::uint32_t> cols(bf.col_of.begin(), bf.col_of.end());
  EXPECT_EQ(rows.size(), bf.row_of.size());
  EXPECT_EQ(cols.size(), bf.col_of.size());
  for (std::size_t r = 0; r < bf.labels.characters.size(); ++r) {
    const auto g = general_label(*bf.algebra, 3, bf.theory->dual_census(), bf.labels.characters[r]);
    EXPECT_EQ(g.e.mask, bf.labels.characters[r].d.touched());
    EXPECT_EQ(g.theta, bf.labels.characters[r].c);
  }
}

}  // namespace
