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

#include "supchar/galois_field.hpp"
#include "supchar/linalg.hpp"

using namespace supchar;

namespace {

Matrix random_matrix(const GaloisField& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = FieldElement{static_cast<std::uint32_t>(rng() % f.size())};
  return m;
}

TEST(Linalg, IdentityRank) {
  const auto f = field_make(3, 1);
  Matrix id(4, 4);
  for (int i = 0; i < 4; ++i) id(i, i) = f->one();
  EXPECT_EQ(rank(*f, id), 4u);
  EXPECT_TRUE(kernel(*f, id).empty());
}

TEST(Linalg, RankNullity) {
  std::mt19937_64 rng(11);
  for (auto [p, k] : {std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u}, std::pair{5u, 1u}}) {
    const auto f = field_make(p, k);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      const auto m = random_matrix(*f, r, c, rng);
      const auto ker = kernel(*f, m);
      EXPECT_EQ(rank(*f, m) + ker.size(), c);
      for (const auto& v : ker) EXPECT_TRUE(is_zero_vector(m.apply(*f, v)));
      EXPECT_EQ(row_space_basis(*f, ker).size(), ker.size());
      EXPECT_EQ(rank(*f, m.transpose()), rank(*f, m));
    }
  }
}

TEST(Linalg, SolveConsistentAndInconsistent) {
  std::mt19937_64 rng(5);
  const auto f = field_make(5, 1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = random_matrix(*f, 4, 3, rng);
    Vector x(3);
    for (auto& v : x) v = FieldElement{static_cast<std::uint32_t>(rng() % 5)};
    const auto b = m.apply(*f, x);
    const auto sol = solve(*f, m, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m.apply(*f, *sol), b);
  }
  Matrix z(2, 2);
  z(0, 0) = f->one();
  EXPECT_FALSE(solve(*f, z, Vector{f->zero(), f->one()}).has_value());
}

TEST(Linalg, MultiplyAssociates) {
  std::mt19937_64 rng(3);
  const auto f = field_make(2, 2);
  const auto a = random_matrix(*f, 3, 4, rng), b = random_matrix(*f, 4, 2, rng), c = random_matrix(*f, 2, 3, rng);
  EXPECT_EQ(multiply(*f, multiply(*f, a, b), c), multiply(*f, a, multiply(*f, b, c)));
}

TEST(Linalg, RowSpaceDropsDependents) {
  const auto f = field_make(3, 1);
  const Vector a{FieldElement{1}, FieldElement{2}, FieldElement{0}};
  const Vector b{FieldElement{2}, FieldElement{1}, FieldElement{0}};  // 2a
  const Vector c{FieldElement{0}, FieldElement{0}, FieldElement{1}};
  EXPECT_EQ(row_space_basis(*f, {a, b, c}).size(), 2u);
}

}  // namespace
