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

#include "oracle.hpp"
#include "supchar/action.hpp"
#include "supchar/algebra_json.hpp"
#include "supchar/error.hpp"
#include "supchar/supercharacter.hpp"
#include "supchar/theory.hpp"
#include "supchar/triangular.hpp"
#include "test_support.hpp"

using namespace supchar;

namespace {

struct Config {
  std::uint32_t n, p;
};
class AgainstOracle : public ::testing::TestWithParam<Config> {};

// Both the closed form and the induced characters agree with plain matrix
// induction evaluated in floating point.
TEST_P(AgainstOracle, EveryCell) {
  const auto c = GetParam();
  const auto field = field_make(c.p, 1);
  const oracle::TriangularOracle ref(static_cast<int>(c.n), static_cast<int>(c.p));
  ASSERT_EQ(static_cast<std::uint32_t>(ref.primitive_root()), field->generator().value);
  const auto bf = brute_force(c.n, field);
  const auto closed = closed_form_table(c.n, field);
  ASSERT_EQ(ref.basic_subsets().size(), basic_subsets(c.n).size());
  for (std::size_t r = 0; r < bf.labels.characters.size(); ++r) {
    const auto& chi = bf.labels.characters[r];
    std::vector<int> cvec(chi.c.begin(), chi.c.end());
    oracle::Roots d;
    for (auto root : chi.d.roots) d.emplace_back(root.i, root.j);
    for (std::size_t col = 0; col < bf.labels.classes.size(); ++col) {
      const auto& cls = bf.labels.classes[col];
      std::vector<int> h;
      for (auto v : cls.h) h.push_back(static_cast<int>(v.value));
      oracle::Roots dp;
      for (auto root : cls.dprime.roots) dp.emplace_back(root.i, root.j);
      const auto expected = ref.value(cvec, d, ref.element(h, dp));
      EXPECT_LT(std::abs(testsupport::evaluate(bf.table.values[r][col]) - expected), 1e-8)
          << label_string(chi) << " at " << label_string(cls);
      EXPECT_LT(std::abs(testsupport::evaluate(closed.values[r][col]) - expected), 1e-8)
          << label_string(chi) << " at " << label_string(cls);
    }
    EXPECT_EQ(bf.table.group_order / ref.stabilizer_order(d),
              closed.values[r][closed.identity_col].to_rational().convert_to<std::uint64_t>());
  }
}

INSTANTIATE_TEST_SUITE_P(Triangular, AgainstOracle,
                         ::testing::Values(Config{2, 2}, Config{2, 3}, Config{2, 5}, Config{3, 2}, Config{3, 3},
                                           Config{4, 2}),
                         [](const auto& info) {
                           return "n" + std::to_string(info.param.n) + "_p" + std::to_string(info.param.p);
                         });

TEST(Stabilizer, StabilizerSplitsAndOrders) {
  const auto alg = std::make_shared<const Algebra>(make_triangular(3, field_make(3, 1)));
  const auto th = Theory::build(alg);
  for (const auto& label : th->labels()) {
    const auto stab = stabilizer_data(*alg, th->group(), label.lambda_rep, label.e);
    EXPECT_TRUE(stab.stabilizer_splits);
    EXPECT_EQ(stab.g_lambda.size(), stab.h_eprime.size() * stab.n_right.size());
    EXPECT_EQ(th->group().size() % stab.g_lambda.size(), 0u);
  }
}

TEST(Stabilizer, RejectsNonRegularForms) {
  const auto alg = make_triangular(3, field_make(2, 1));
  const auto group = FiniteGroup::units(alg);
  // E12* is regular in the corner {1,2}, not in the full algebra.
  const auto lambda = lambda_of(alg, 3, BasicSubset{{Root{1, 2}}});
  EXPECT_NO_THROW(stabilizer_data(alg, group, lambda, Idempotent{0b011}));
  try {
    stabilizer_data(alg, group, lambda, Idempotent{0b111});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotRegular);
  }
}

TEST(Xi, LinearOnTheStabilizer) {
  const auto alg = std::make_shared<const Algebra>(make_triangular(3, field_make(3, 1)));
  const auto th = Theory::build(alg);
  const auto& group = th->group();
  for (const auto& label : th->labels()) {
    const auto stab = stabilizer_data(*alg, group, label.lambda_rep, label.e);
    for (std::size_t a = 0; a < stab.g_lambda.size(); a += 3)
      for (std::size_t b = 0; b < stab.g_lambda.size(); b += 5) {
        const auto ga = stab.g_lambda[a], gb = stab.g_lambda[b];
        EXPECT_EQ(xi(*alg, label, group.element(group.multiply(ga, gb))),
                  xi(*alg, label, group.element(ga)) * xi(*alg, label, group.element(gb)));
      }
  }
  // An element outside every G_lambda for the regular form lambda_{(1,3)}.
  const auto& regular = th->labels().back();
  auto g = alg->one();
  g.coeffs[0] = FieldElement{2};
  if (regular.e.has_block(0)) {
    try {
      xi(*alg, regular, g);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNotInStabilizer);
    }
  }
}

TEST(InnerProduct, Orthogonality) {
  const auto alg = std::make_shared<const Algebra>(load_algebra(testsupport::spec_file("kronecker_gf3.json")));
  const auto th = Theory::build(alg);
  const auto& sizes = th->inducer().sizes();
  const auto order = th->group().size();
  const auto& chars = th->characters();
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = 0; j < chars.size(); ++j) {
      const auto ip = inner_product(sizes, order, chars[i], chars[j]);
      if (i != j) {
        EXPECT_TRUE(ip.is_zero());
      }
      else EXPECT_TRUE(ip.is_rational() && ip.to_rational() > 0);
    }
  ClassFunction short_fn{{CycloNumber::one(alg->cyclotomic_order())}};
  try {
    inner_product(sizes, order, short_fn, chars[0]);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPartitionMismatch);
  }
}

TEST(Restriction, WeakFormHolds) {
  for (auto [n, p] : {std::pair{3u, 2u}, std::pair{3u, 3u}}) {
    const auto alg = std::make_shared<const Algebra>(make_triangular(n, field_make(p, 1)));
    const auto th = Theory::build(alg);
    const auto n_group = FiniteGroup::unipotent(*alg);
    const Restriction res(*alg, th->group(), n_group, th->dual_census(), th->inducer().class_of());
    // One N-supercharacter per basic subset D and nonzero weights on D.
    std::size_t expected = 0;
    for (const auto& d : basic_subsets(n)) {
      std::size_t w = 1;
      for (std::size_t i = 0; i < d.roots.size(); ++i) w *= p - 1;
      expected += w;
    }
    EXPECT_EQ(res.n_character_count(), expected);
    for (std::size_t i = 0; i < th->labels().size(); ++i) {
      const auto report = res.report(th->labels()[i], th->characters()[i]);
      EXPECT_TRUE(report.ok()) << report.summary();
      EXPECT_FALSE(report.coefficients.empty());
    }
  }
}

TEST(NSupercharacter, DegreeAtIdentity) {
  const auto alg = make_triangular(3, field_make(3, 1));
  const auto n_group = FiniteGroup::unipotent(alg);
  const auto values = n_supercharacter(alg, n_group, lambda_of(alg, 3, BasicSubset{{Root{1, 3}}}));
  // Induced from N_{right} = {x_12 = 0}, so the degree is [N : N_right] = q.
  EXPECT_EQ(values[n_group.identity()], CycloNumber::from_rational(alg.cyclotomic_order(), Rational(3)));
}

TEST(Labels, CountMatchesPartition) {
  for (const char* name : {"dual_numbers_gf3.json", "kronecker_gf3.json", "gf4_dual_numbers_over_gf2.json"}) {
    const auto alg = load_algebra(testsupport::spec_file(name));
    const auto labels = superchar_labels(alg, orbit_census(alg, Space::kDual));
    EXPECT_TRUE(std::is_sorted(labels.begin(), labels.end()));
    const auto th = Theory::build(std::make_shared<const Algebra>(alg));
    EXPECT_EQ(labels.size(), th->superclasses().size()) << name;
  }
}

TEST(Induction, ParallelMatchesSerial) {
  const auto alg = std::make_shared<const Algebra>(make_triangular(3, field_make(3, 1)));
  TheoryOptions one, four;
  four.jobs = 4;
  const auto a = Theory::build(alg, one);
  const auto b = Theory::build(alg, four);
  ASSERT_EQ(a->characters().size(), b->characters().size());
  for (std::size_t i = 0; i < a->characters().size(); ++i)
    EXPECT_EQ(a->characters()[i].values, b->characters()[i].values);
}

}  // namespace
