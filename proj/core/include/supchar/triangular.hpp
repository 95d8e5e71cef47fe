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

#ifndef SUPCHAR_TRIANGULAR_HPP_
#define SUPCHAR_TRIANGULAR_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "supchar/algebra.hpp"
#include "supchar/character_table.hpp"
#include "supchar/cyclotomic.hpp"
#include "supchar/theory.hpp"

namespace supchar {

// Positive root (i, j), 1 <= i < j <= n.
struct Root {
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  friend auto operator<=>(const Root&, const Root&) = default;
};

// At most one root per row and per column; roots kept sorted.
struct BasicSubset {
  std::vector<Root> roots;

  bool contains(Root r) const;
  // row(D) union col(D), 1-based, as a bitmask over positions 1..n (bit i-1).
  std::uint32_t touched() const;

  friend auto operator<=>(const BasicSubset&, const BasicSubset&) = default;
};

struct TriSuperclassLabel {
  std::vector<FieldElement> h;  // diagonal, length n, nonzero
  BasicSubset dprime;
};

struct TriSupercharLabel {
  std::vector<std::uint64_t> c;  // exponents mod q-1, length n
  BasicSubset d;
};

// t(n, q): basis E_11..E_nn followed by E_ij (i < j) in lexicographic order.
AlgebraSpec make_triangular_spec(std::uint32_t n, const FieldSpec& field);
Algebra make_triangular(std::uint32_t n, const FieldSpec& field);
// Basis index of E_ij (1-based i <= j).
std::uint32_t matrix_unit_index(std::uint32_t n, std::uint32_t i, std::uint32_t j);

// Ordered by size, then lexicographically by root list.
std::vector<BasicSubset> basic_subsets(std::uint32_t n);
bool is_regular_d(const BasicSubset& d, std::uint32_t n);

// x_D = sum of E_ij over D (full coordinates) and lambda_D (radical coordinates).
AlgebraElement x_of(const Algebra& alg, std::uint32_t n, const BasicSubset& d);
DualForm lambda_of(const Algebra& alg, std::uint32_t n, const BasicSubset& d);

struct TriLabels {
  std::vector<TriSuperclassLabel> classes;
  std::vector<TriSupercharLabel> characters;
};
// (D', h) and (D, c), basic subsets in order, vectors lexicographically.
TriLabels triangular_labels(std::uint32_t n, const GaloisField& field);
// sum over D of (q-1)^(n - |row(D) u col(D)|).
std::uint64_t triangular_label_count(std::uint32_t n, std::uint64_t q);

std::string label_string(const TriSuperclassLabel& label);
std::string label_string(const TriSupercharLabel& label);

struct DeltaFactors {
  int dprime = 1;
  int ddouble = 1;
  int dzero = 1;
};
DeltaFactors delta_factors(const BasicSubset& d, const std::vector<FieldElement>& h, const BasicSubset& dprime);

// Exponent of (q-1). kLiteral is |D| + |D \ D'|, which treats the torus
// sums of distinct roots as independent. When a root of D starts in the
// column where another ends the two share a torus coordinate; kPath sums
// along each such path and gives |row(D) u col(D)| - |D n D'|. The two agree
// whenever no index is both a row and a column of D.
enum class TorusExponent { kPath, kLiteral };

struct MandS {
  std::uint64_t m = 0;
  std::uint64_t s = 0;
};
// m counts zero rows of the windows of g - 1; a rank computation is run
// alongside and must agree.
MandS m_and_s(const GaloisField& field, const BasicSubset& d, const std::vector<FieldElement>& h,
              const BasicSubset& dprime, TorusExponent exponent = TorusExponent::kPath);

// Closed-form value of chi_{theta,D} on K_{h,D'} at order lcm(p, q-1).
CycloNumber triangular_value(const GaloisField& field, const TriSupercharLabel& chi, const TriSuperclassLabel& cls,
                             TorusExponent exponent = TorusExponent::kPath);

// True when some index is the column of one root of D and the row of another.
bool is_chained(const BasicSubset& d);

// (q-1)^n q^(n(n-1)/2), or 0 on overflow.
std::uint64_t triangular_group_order(std::uint32_t n, std::uint64_t q);

// g_{h,D'} = h + x_{D'}.
AlgebraElement superclass_element(const Algebra& alg, std::uint32_t n, const TriSuperclassLabel& label);

inline constexpr std::uint64_t kDefaultCellBound = std::uint64_t{1} << 22;

struct TriangularOptions {
  std::uint64_t group_bound = kDefaultGroupBound;
  std::uint64_t space_bound = kDefaultSpaceBound;
  std::uint64_t cell_bound = kDefaultCellBound;
  TorusExponent exponent = TorusExponent::kPath;
  unsigned jobs = 1;
};

// Every value from the closed formula. Superclass sizes come from a BFS of
// each superclass, which needs |G| within 64 times the group bound.
CharacterTable closed_form_table(std::uint32_t n, const FieldSpec& field, const TriangularOptions& options = {});

// The generic pipeline on t(n, q), re-indexed by triangular labels.
struct BruteForce {
  std::shared_ptr<const Algebra> algebra;
  std::unique_ptr<Theory> theory;
  TriLabels labels;
  std::vector<std::uint32_t> row_of;  // triangular character -> theory label index
  std::vector<std::uint32_t> col_of;  // triangular class -> theory superclass index
  CharacterTable table;
};
BruteForce brute_force(std::uint32_t n, const FieldSpec& field, const TriangularOptions& options = {});

// The general label of chi_{theta,D}: e from row(D) u col(D), f from the
// support of c, lambda_rep the least form of the orbit of lambda_D in J_e*.
SupercharLabel general_label(const Algebra& alg, std::uint32_t n, const OrbitCensus& dual_census,
                             const TriSupercharLabel& label);

}  // namespace supchar

#endif  // SUPCHAR_TRIANGULAR_HPP_
