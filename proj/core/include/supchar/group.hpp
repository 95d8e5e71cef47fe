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

#ifndef SUPCHAR_GROUP_HPP_
#define SUPCHAR_GROUP_HPP_

#include <cstdint>
#include <vector>

#include "supchar/action.hpp"
#include "supchar/algebra.hpp"

namespace supchar {

inline constexpr std::uint64_t kDefaultGroupBound = std::uint64_t{1} << 17;

// |G| = |H| q^dim J without enumerating anything; 0 on overflow.
std::uint64_t unit_group_order(const Algebra& alg);

// An explicitly enumerated subgroup of the unit group: all of G = H + J, or
// N = 1 + J. Elements are sorted by coordinate key (lexicographic order).
// Holds a reference to the algebra, which must outlive it.
class FiniteGroup {
 public:
  static FiniteGroup units(const Algebra& alg, std::uint64_t bound = kDefaultGroupBound);
  static FiniteGroup unipotent(const Algebra& alg, std::uint64_t bound = kDefaultGroupBound);

  const Algebra& algebra() const { return *alg_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(elements_.size()); }
  const AlgebraElement& element(std::uint32_t i) const { return elements_[i]; }
  std::uint64_t key(std::uint32_t i) const { return keys_[i]; }
  std::uint32_t inverse(std::uint32_t i) const { return inverse_[i]; }
  // Index of an element given by full coordinates, or KeyIndex::kAbsent.
  std::uint32_t index_of(const Vector& coeffs) const { return index_.get(codec_.encode(coeffs)); }
  std::uint32_t index_of_key(std::uint64_t key) const { return index_.get(key); }
  std::uint32_t identity() const { return identity_; }
  std::uint32_t multiply(std::uint32_t i, std::uint32_t j) const;
  const VectorCodec& codec() const { return codec_; }

  // Matrix of x -> g x g^-1 on full coordinates.
  Matrix conjugation_matrix(std::uint32_t g) const;
  // Block generators of H (units only) and 1 + c b for radical basis vectors b.
  std::vector<std::uint32_t> generators() const;
  // Conjugacy classes, each sorted, listed by least member.
  std::vector<std::vector<std::uint32_t>> conjugacy_classes() const;

 private:
  FiniteGroup(const Algebra& alg, std::vector<std::uint64_t> keys);

  const Algebra* alg_;
  VectorCodec codec_;
  std::vector<std::uint64_t> keys_;
  std::vector<AlgebraElement> elements_;
  std::vector<std::uint32_t> inverse_;
  KeyIndex index_;
  std::uint32_t identity_ = 0;
  bool unipotent_ = false;
};

}  // namespace supchar

#endif  // SUPCHAR_GROUP_HPP_
