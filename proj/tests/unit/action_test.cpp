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

#include <random>
#include <set>

#include "supchar/action.hpp"
#include "supchar/algebra_json.hpp"
#include "supchar/error.hpp"
#include "supchar/triangular.hpp"
#include "test_support.hpp"

using namespace supchar;

namespace {

Algebra tri(std::uint32_t n, std::uint32_t p, std::uint32_t k = 1) { return make_triangular(n, field_make(p, k)); }

bool same(const Algebra& alg, const TildeTriple& a, const TildeTriple& b) {
  (void)alg;
  return a.t.element == b.t.element && a.a.element == b.a.element && a.b.element == b.b.element;
}

TEST(Triples, GroupLaws) {
  const auto alg = tri(3, 3);
  const auto samples = random_triples(alg, 12, 99);
  const auto id = identity_triple(alg);
  for (const auto& x : samples) {
    EXPECT_TRUE(same(alg, triple_product(alg, x, id), x));
    EXPECT_TRUE(same(alg, triple_product(alg, x, triple_inverse(alg, x)), id));
    for (const auto& y : samples)
      for (std::size_t k = 0; k < 3; ++k) {
        const auto& z = samples[k];
        EXPECT_TRUE(same(alg, triple_product(alg, triple_product(alg, x, y), z),
                         triple_product(alg, x, triple_product(alg, y, z))));
      }
  }
}

TEST(Triples, ActionsAreActionsAndPairingIsInvariant) {
  for (const auto& alg : {tri(3, 3), tri(3, 2, 2), load_algebra(testsupport::spec_file("kronecker_gf3.json"))}) {
    const auto samples = random_triples(alg, 8, 5);
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 6; ++trial) {
      Vector xc(alg.radical_dim()), lc(alg.radical_dim());
      for (auto& v : xc) v = FieldElement{static_cast<std::uint32_t>(rng() % alg.field().size())};
      for (auto& v : lc) v = FieldElement{static_cast<std::uint32_t>(rng() % alg.field().size())};
      const auto x = alg.from_radical(xc);
      const DualForm lambda{lc};
      auto g = alg.add(alg.one(), x);
      for (const auto& s : samples) {
        EXPECT_EQ(alg.evaluate(rho_dual(alg, s, lambda), rho(alg, s, x)), alg.evaluate(lambda, x));
        for (const auto& t : samples) {
          const auto st = triple_product(alg, s, t);
          EXPECT_EQ(rho(alg, st, x), rho(alg, s, rho(alg, t, x)));
          EXPECT_EQ(rho_dual(alg, st, lambda), rho_dual(alg, s, rho_dual(alg, t, lambda)));
          EXPECT_EQ(r_act(alg, st, g), r_act(alg, s, r_act(alg, t, g)));
        }
        // Affine maps agree with the direct formulas.
        Vector out(alg.radical_dim());
        action_map(alg, s, Space::kJ).apply_into(alg.field(), xc, out);
        EXPECT_EQ(out, alg.radical_coords(rho(alg, s, x)));
        Vector gout(alg.dim());
        action_map(alg, s, Space::kGroup).apply_into(alg.field(), g.coeffs, gout);
        EXPECT_EQ(gout, r_act(alg, s, g).coeffs);
      }
    }
  }
}

TEST(Triples, MakeTripleValidates) {
  const auto alg = tri(2, 3);
  const auto one = alg.one();
  auto bad_t = one;
  bad_t.coeffs[2] = FieldElement{1};  // 1 + E12 is not in H
  try {
    make_triple(alg, bad_t, one, one);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotInH);
  }
  auto bad_a = one;
  bad_a.coeffs[0] = FieldElement{2};
  try {
    make_triple(alg, one, bad_a, one);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotInRadical);
  }
}

struct Config {
  std::uint32_t n, p, k;
};
class Censuses : public ::testing::TestWithParam<Config> {};

TEST_P(Censuses, PartitionAndCounts) {
  const auto c = GetParam();
  const auto alg = tri(c.n, c.p, c.k);
  const auto q = alg.field().size();
  for (Space space : {Space::kJ, Space::kDual}) {
    const auto census = orbit_census(alg, space);
    std::uint64_t total = 0;
    std::set<std::uint64_t> seen;
    for (std::size_t i = 0; i < census.orbits.size(); ++i) {
      const auto& rec = census.orbits[i].record;
      total += rec.members.size();
      EXPECT_TRUE(std::is_sorted(rec.members.begin(), rec.members.end()));
      const VectorCodec codec(q, alg.radical_dim());
      EXPECT_EQ(codec.encode(rec.representative), rec.members.front());
      for (auto key : rec.members) {
        EXPECT_TRUE(seen.insert(key).second);
        EXPECT_EQ(census.orbit_of[key], i);
      }
    }
    std::uint64_t space_size = 1;
    for (std::uint32_t i = 0; i < alg.radical_dim(); ++i) space_size *= q;
    EXPECT_EQ(total, space_size);
    EXPECT_EQ(census.residual, 0);
    // Orbits on J and J* are indexed by basic subsets.
    EXPECT_EQ(census.n, basic_subsets(c.n).size());
    EXPECT_EQ(census.n_exact[0], 1u);
    EXPECT_TRUE(verify_corner_counts(alg, census).empty());
  }
  EXPECT_EQ(orbit_census(alg, Space::kJ).n_regular, orbit_census(alg, Space::kDual).n_regular);
}

INSTANTIATE_TEST_SUITE_P(Triangular, Censuses,
                         ::testing::Values(Config{2, 2, 1}, Config{2, 3, 1}, Config{3, 2, 1}, Config{3, 3, 1},
                                           Config{3, 2, 2}, Config{4, 2, 1}, Config{4, 3, 1}),
                         [](const auto& info) {
                           return "n" + std::to_string(info.param.n) + "_p" + std::to_string(info.param.p) + "_k" +
                                  std::to_string(info.param.k);
                         });

TEST(Censuses, TwoByTwoOverGF2) {
  const auto alg = tri(2, 2);
  const auto j = orbit_census(alg, Space::kJ);
  const auto d = orbit_census(alg, Space::kDual);
  EXPECT_EQ(j.n, 2u);
  EXPECT_EQ(j.n_regular, 1u);
  EXPECT_EQ(d.n, 2u);
  EXPECT_EQ(d.n_regular, 1u);
}

TEST(Censuses, CustomSpecs) {
  for (const char* name : {"dual_numbers_gf3.json", "kronecker_gf3.json", "gf4_dual_numbers_over_gf2.json"}) {
    const auto alg = load_algebra(testsupport::spec_file(name));
    const auto j = orbit_census(alg, Space::kJ);
    const auto d = orbit_census(alg, Space::kDual);
    EXPECT_EQ(j.n_regular, d.n_regular) << name;
    EXPECT_EQ(j.residual, 0) << name;
    EXPECT_EQ(d.residual, 0) << name;
  }
}

TEST(Singularity, ConstantOnOrbits) {
  for (const auto& alg : {tri(3, 3), tri(4, 2), load_algebra(testsupport::spec_file("kronecker_gf3.json"))}) {
    const VectorCodec codec(alg.field().size(), alg.radical_dim());
    for (Space space : {Space::kJ, Space::kDual}) {
      const auto census = orbit_census(alg, space);
      for (const auto& orb : census.orbits)
        for (auto key : orb.record.members) EXPECT_EQ(is_singular(alg, codec.decode(key), space), orb.singular);
    }
  }
}

TEST(Singularity, AnnihilatorMatchesRookCriterion) {
  for (std::uint32_t n = 2; n <= 4; ++n)
    for (std::uint32_t p : {2u, 3u}) {
      const auto alg = tri(n, p);
      for (const auto& d : basic_subsets(n)) {
        const bool regular = is_regular_d(d, n);
        EXPECT_EQ(is_singular(alg, alg.radical_coords(x_of(alg, n, d)), Space::kJ), !regular) << label_string(
            TriSupercharLabel{std::vector<std::uint64_t>(n, 0), d});
        EXPECT_EQ(is_singular(alg, lambda_of(alg, n, d).coeffs, Space::kDual), !regular);
        EXPECT_EQ(peirce_support(alg, alg.radical_coords(x_of(alg, n, d)), Space::kJ).mask, d.touched());
      }
    }
}

TEST(Singularity, ZeroIsSingularAndWithinEmptyIsNot) {
  const auto alg = tri(3, 2);
  const Vector zero(alg.radical_dim());
  EXPECT_TRUE(is_singular(alg, zero, Space::kJ));
  EXPECT_FALSE(is_singular(alg, zero, Space::kJ, Idempotent{0}));
}

TEST(Orbits, SpaceBound) {
  const auto alg = tri(4, 3);
  try {
    orbit_census(alg, Space::kJ, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSpaceTooLarge);
  }
}

TEST(Orbits, CornerAlgebraOfTriangularIsTriangular) {
  const auto alg = tri(4, 2);
  const auto corner = corner_algebra(alg, Idempotent{0b1011});
  ASSERT_TRUE(corner.has_value());
  EXPECT_EQ(corner->algebra->block_count(), 3u);
  EXPECT_EQ(corner->algebra->radical_dim(), 3u);
  EXPECT_EQ(corner->blocks, (std::vector<std::uint32_t>{0, 1, 3}));
  EXPECT_FALSE(corner_algebra(alg, Idempotent{0}).has_value());
}

TEST(Orbits, SupportRepresentativeLiesInCorner) {
  const auto alg = tri(3, 3);
  const auto census = orbit_census(alg, Space::kJ);
  for (const auto& orb : census.orbits) {
    EXPECT_EQ(peirce_support(alg, orb.support_rep, Space::kJ), orb.support);
    EXPECT_FALSE(is_singular(alg, orb.support_rep, Space::kJ, orb.support));
    // The orbit support is the meet of the member supports.
    const VectorCodec codec(alg.field().size(), alg.radical_dim());
    for (auto key : orb.record.members)
      EXPECT_TRUE(peirce_support(alg, codec.decode(key), Space::kJ).contains(orb.support));
  }
}

}  // namespace
