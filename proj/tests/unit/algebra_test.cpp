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

#include <fstream>
#include <sstream>

#include "supchar/algebra.hpp"
#include "supchar/algebra_json.hpp"
#include "supchar/error.hpp"
#include "supchar/triangular.hpp"
#include "test_support.hpp"

using namespace supchar;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Error expect_error(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "expected supchar::Error";
  return Error(ErrorCode::kMalformedSpec, "none");
}

TEST(Algebra, TriangularBasics) {
  const auto alg = make_triangular(3, field_make(2, 1));
  EXPECT_EQ(alg.dim(), 6u);
  EXPECT_EQ(alg.radical_dim(), 3u);
  EXPECT_EQ(alg.block_count(), 3u);
  EXPECT_EQ(alg.nilpotency_class(), 3u);
  EXPECT_EQ(alg.cyclotomic_order(), 2u);
}

TEST(Algebra, MultiplicationIsAssociativeAndUnital) {
  const auto alg = make_triangular(3, field_make(3, 1));
  for (std::uint32_t i = 0; i < alg.dim(); ++i) {
    const auto bi = alg.basis(i);
    EXPECT_EQ(alg.mul(alg.one(), bi), bi);
    EXPECT_EQ(alg.mul(bi, alg.one()), bi);
    for (std::uint32_t j = 0; j < alg.dim(); ++j)
      for (std::uint32_t k = 0; k < alg.dim(); ++k)
        EXPECT_EQ(alg.mul(alg.mul(bi, alg.basis(j)), alg.basis(k)), alg.mul(bi, alg.mul(alg.basis(j), alg.basis(k))));
  }
}

TEST(Algebra, DecompositionAndInverse) {
  const auto f = field_make(3, 1);
  const auto alg = make_triangular(3, f);
  AlgebraElement g = alg.zero();
  g.coeffs = {FieldElement{2}, FieldElement{1}, FieldElement{2}, FieldElement{1}, FieldElement{2}, FieldElement{1}};
  EXPECT_EQ(alg.add(alg.s_part(g), alg.j_part(g)), g);
  EXPECT_TRUE(alg.in_radical(alg.j_part(g)));
  const auto inv = invert(alg, g);
  EXPECT_EQ(alg.mul(g, inv.inverse), alg.one());
  EXPECT_EQ(alg.mul(inv.inverse, g), alg.one());
  AlgebraElement singular = g;
  singular.coeffs[0] = FieldElement{0};
  EXPECT_EQ(expect_error([&] { invert(alg, singular); }).code(), ErrorCode::kNotInvertible);
}

TEST(Algebra, BlockLogsFollowTheFieldGenerator) {
  const auto f = field_make(5, 1);
  const auto alg = make_triangular(2, f);
  for (std::uint32_t i = 0; i < 2; ++i) {
    EXPECT_EQ(alg.block_unit_count(i), 4u);
    for (const auto& u : alg.block_units(i)) EXPECT_EQ(alg.block_dlog(i, u), f->dlog(u.coeffs[i]));
  }
}

TEST(Algebra, CodecOrderIsLexOrder) {
  const VectorCodec codec(3, 3);
  Vector prev;
  for (std::uint64_t key = 0; key < codec.space_size(); ++key) {
    const auto v = codec.decode(key);
    EXPECT_EQ(codec.encode(v), key);
    if (key) {
      EXPECT_LT(prev, v);
    }
    prev = v;
  }
}

TEST(AlgebraJson, BundledSpecsLoad) {
  for (const char* name : {"dual_numbers_gf3.json", "kronecker_gf3.json", "gf4_dual_numbers_over_gf2.json", "t23.json"}) {
    const auto alg = load_algebra(testsupport::spec_file(name));
    EXPECT_GT(alg.dim(), 0u) << name;
  }
  const auto gf4 = load_algebra(testsupport::spec_file("gf4_dual_numbers_over_gf2.json"));
  EXPECT_EQ(gf4.block_unit_count(0), 3u);
  EXPECT_EQ(gf4.cyclotomic_order(), 6u);
}

TEST(AlgebraJson, RoundTrip) {
  const auto spec = make_triangular_spec(3, field_make(3, 1));
  const auto text = dump_algebra_spec(spec);
  const auto again = parse_algebra_spec(text);
  EXPECT_EQ(dump_algebra_spec(again), text);
  const auto a = validate_algebra(again);
  EXPECT_EQ(a.dim(), 6u);
}

TEST(AlgebraJson, ExtensionFieldCoefficients) {
  // GF(4)[u]/u^2 with coefficients written as digit arrays.
  const std::string text = R"({"p": 2, "k": 2, "dim": 2, "unit": [[1,0],[0,0]],
    "mul": [[0, 0, [[0, [1,0]]]], [0, 1, [[1, [1,0]]]], [1, 0, [[1, [1,0]]]]],
    "blocks": [{"idempotent": [[1,0],[0,0]], "degree": 1, "basis": [0]}], "radical_basis": [1]})";
  const auto alg = validate_algebra(parse_algebra_spec(text));
  EXPECT_EQ(alg.field().size(), 4u);
  EXPECT_EQ(alg.block_unit_count(0), 3u);
}

struct BadSpec {
  const char* file;
  ErrorCode code;
  const char* path;
};

class BadSpecs : public ::testing::TestWithParam<BadSpec> {};

TEST_P(BadSpecs, ReportCodeAndPath) {
  const auto& c = GetParam();
  const auto e = expect_error([&] { load_algebra(testsupport::data_file(c.file)); });
  EXPECT_EQ(e.code(), c.code) << e.what();
  EXPECT_EQ(e.path(), c.path) << e.what();
}

INSTANTIATE_TEST_SUITE_P(
    Data, BadSpecs,
    ::testing::Values(BadSpec{"noncommutative_s.json", ErrorCode::kSNotCommutative, "/blocks/0/basis"},
                      BadSpec{"non_nilpotent_radical.json", ErrorCode::kRadicalNotNilpotent, "/radical_basis"},
                      BadSpec{"not_associative.json", ErrorCode::kNotAssociative, "/mul"},
                      BadSpec{"malformed_index.json", ErrorCode::kMalformedSpec, "/mul/1/2/0/0"}),
    [](const auto& info) {
      std::string name = info.param.file;
      name = name.substr(0, name.find('.'));
      return name;
    });

TEST(AlgebraJson, InlineErrors) {
  auto code_and_path = [](const std::string& text) {
    try {
      validate_algebra(parse_algebra_spec(text));
    } catch (const Error& e) {
      return std::pair{e.code(), e.path()};
    }
    return std::pair{ErrorCode::kBadSize, std::string("no error")};
  };
  EXPECT_EQ(code_and_path("{not json").first, ErrorCode::kMalformedSpec);
  EXPECT_EQ(code_and_path(R"({"p": 4, "dim": 1, "unit": [1], "mul": [[0,0,[[0,1]]]],
    "blocks": [{"idempotent": [1], "basis": [0]}], "radical_basis": []})"),
            (std::pair{ErrorCode::kNotPrime, std::string("/p")}));
  EXPECT_EQ(code_and_path(R"({"p": 3, "dim": 1, "unit": [1], "mul": [[0,0,[[0,1]]]],
    "blocks": [{"idempotent": [1], "basis": [0]}], "radical_basis": [0]})")
                .first,
            ErrorCode::kNotDirectSum);
  EXPECT_EQ(code_and_path(R"({"p": 3, "dim": 2, "unit": [1, 1], "mul": [[0,0,[[0,1]]],[0,1,[[1,1]]],[1,0,[[1,1]]]],
    "blocks": [{"idempotent": [1, 0], "basis": [0]}], "radical_basis": [1]})")
                .first,
            ErrorCode::kBadUnit);
  // Idempotent of the only block is 2*b0, which is not idempotent over GF(3).
  EXPECT_EQ(code_and_path(R"({"p": 3, "dim": 1, "unit": [1], "mul": [[0,0,[[0,1]]]],
    "blocks": [{"idempotent": [2], "basis": [0]}], "radical_basis": []})")
                .first,
            ErrorCode::kBadIdempotents);
  EXPECT_EQ(code_and_path(R"({"p": 3, "dim": 1, "unit": [1], "mul": [[0,0,[[0,1]]]],
    "blocks": [{"idempotent": [1], "degree": 2, "basis": [0]}], "radical_basis": []})")
                .first,
            ErrorCode::kMalformedSpec);
}

TEST(AlgebraJson, MissingFileIsMalformed) {
  EXPECT_EQ(expect_error([] { load_algebra("/nonexistent/spec.json"); }).code(), ErrorCode::kMalformedSpec);
}

TEST(AlgebraJson, BundledT23MatchesGenerator) {
  const auto from_file = load_algebra_spec(testsupport::spec_file("t23.json"));
  EXPECT_EQ(validate_algebra(from_file).dim(), make_triangular(2, field_make(3, 1)).dim());
  const auto text = read_file(testsupport::spec_file("t23.json"));
  EXPECT_NE(text.find("\"radical_basis\""), std::string::npos);
}

}  // namespace
