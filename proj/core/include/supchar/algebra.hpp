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

#ifndef SUPCHAR_ALGEBRA_HPP_
#define SUPCHAR_ALGEBRA_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "supchar/galois_field.hpp"
#include "supchar/linalg.hpp"

namespace supchar {

struct StructureTerm {
  std::uint32_t index = 0;
  FieldElement coeff;
};

// b_left * b_right = sum of terms.
struct StructureEntry {
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  std::vector<StructureTerm> terms;
};

struct BlockSpec {
  Vector idempotent;
  std::uint32_t degree = 1;
  std::vector<std::uint32_t> basis;
};

// Unvalidated description of A = S + J. Basis indices of all blocks together
// with radical_basis must partition [0, dim).
struct AlgebraSpec {
  FieldSpec field;
  std::uint32_t dim = 0;
  std::vector<StructureEntry> mul;
  Vector unit;
  std::vector<BlockSpec> blocks;
  std::vector<std::uint32_t> radical_basis;
};

struct AlgebraElement {
  Vector coeffs;

  friend auto operator<=>(const AlgebraElement&, const AlgebraElement&) = default;
};

// Linear form on J, coordinates indexed like radical_basis.
struct DualForm {
  Vector coeffs;

  friend auto operator<=>(const DualForm&, const DualForm&) = default;
};

struct GroupElement {
  AlgebraElement element;
  AlgebraElement inverse;
};

// Sum of the primitive idempotents e_i for the set bits i.
struct Idempotent {
  std::uint32_t mask = 0;

  bool contains(Idempotent other) const { return (mask & other.mask) == other.mask; }
  bool orthogonal(Idempotent other) const { return (mask & other.mask) == 0; }
  bool has_block(std::uint32_t i) const { return (mask >> i) & 1u; }
  Idempotent product(Idempotent other) const { return {mask & other.mask}; }
  Idempotent complement(std::uint32_t block_count) const {
    return {~mask & ((block_count >= 32 ? 0u : (1u << block_count)) - 1u)};
  }
  int size() const { return std::popcount(mask); }

  friend auto operator<=>(Idempotent, Idempotent) = default;
};

// A validated reduced algebra. Immutable and safe to share between threads.
class Algebra {
 public:
  const AlgebraSpec& spec() const { return spec_; }
  const GaloisField& field() const { return *spec_.field; }
  const FieldSpec& field_ptr() const { return spec_.field; }
  std::uint32_t dim() const { return spec_.dim; }
  std::uint32_t radical_dim() const { return static_cast<std::uint32_t>(spec_.radical_basis.size()); }
  std::uint32_t block_count() const { return static_cast<std::uint32_t>(spec_.blocks.size()); }
  std::uint32_t nilpotency_class() const { return nilpotency_class_; }
  const std::vector<std::uint32_t>& radical_indices() const { return spec_.radical_basis; }
  // Position of basis index `i` inside radical_basis, or -1.
  int radical_position(std::uint32_t i) const { return radical_position_[i]; }
  // Block owning basis index `i`, or -1 for radical indices.
  int block_of_index(std::uint32_t i) const { return block_of_index_[i]; }

  AlgebraElement zero() const { return AlgebraElement{Vector(dim())}; }
  AlgebraElement one() const { return AlgebraElement{spec_.unit}; }
  AlgebraElement basis(std::uint32_t i) const;
  AlgebraElement idempotent(Idempotent e) const;
  Idempotent full_idempotent() const { return Idempotent{}.complement(block_count()); }

  AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) const;
  void mul_into(std::span<const FieldElement> x, std::span<const FieldElement> y,
                std::span<FieldElement> out) const;
  AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement scale(FieldElement c, const AlgebraElement& x) const;

  AlgebraElement s_part(const AlgebraElement& x) const;
  AlgebraElement j_part(const AlgebraElement& x) const;
  bool in_radical(const AlgebraElement& x) const;
  Vector radical_coords(const AlgebraElement& x) const;
  AlgebraElement from_radical(std::span<const FieldElement> coords) const;
  FieldElement evaluate(const DualForm& form, const AlgebraElement& x) const;

  // d x d matrices of x -> a x and x -> x a.
  Matrix left_mul_matrix(const AlgebraElement& a) const;
  Matrix right_mul_matrix(const AlgebraElement& a) const;

  // Coordinates of x on the basis of block i (the component x e_i for x in S).
  Vector block_component(const AlgebraElement& x, std::uint32_t i) const;
  // |H_i| = q^{d_i} - 1.
  std::uint64_t block_unit_count(std::uint32_t i) const { return block_unit_count_[i]; }
  AlgebraElement block_generator(std::uint32_t i) const { return block_generator_[i]; }
  // Discrete log of the block-i component of `h` with respect to block_generator(i).
  std::uint64_t block_dlog(std::uint32_t i, const AlgebraElement& h) const;
  // Nonzero elements of k_i e_i, in coordinate order.
  std::vector<AlgebraElement> block_units(std::uint32_t i) const;
  // Blocks on which the S-part of `s` is nonzero.
  Idempotent support_of_s(const AlgebraElement& s) const;

  // lcm over blocks of |H_i|.
  std::uint64_t h_exponent() const { return h_exponent_; }
  // m = lcm(p, exponent of H); every character value lies in Q(zeta_m).
  std::uint32_t cyclotomic_order() const { return cyclotomic_order_; }

  friend Algebra validate_algebra(AlgebraSpec raw);

 private:
  Algebra() = default;

  AlgebraSpec spec_;
  std::vector<std::vector<StructureTerm>> table_;
  std::vector<int> radical_position_;
  std::vector<int> block_of_index_;
  std::uint32_t nilpotency_class_ = 1;
  std::vector<std::uint64_t> block_unit_count_;
  std::vector<AlgebraElement> block_generator_;
  std::vector<std::vector<std::uint32_t>> block_dlog_;  // keyed by packed block coordinates
  std::uint64_t h_exponent_ = 1;
  std::uint32_t cyclotomic_order_ = 1;
};

// Checks every standing hypothesis on a reduced algebra and derives the block
// data. Errors carry the JSON-pointer style path of the violated field.
Algebra validate_algebra(AlgebraSpec raw);

// Solves g y = 1 and checks y g = 1; throws NotInvertible otherwise.
GroupElement invert(const Algebra& alg, const AlgebraElement& g);

// Packs a coordinate vector into an integer key whose numeric order is the
// lexicographic order of the vectors.
class VectorCodec {
 public:
  VectorCodec(std::uint32_t q, std::uint32_t length);

  std::uint32_t length() const { return length_; }
  // q^length, or 0 if it does not fit into 63 bits.
  std::uint64_t space_size() const { return space_size_; }
  std::uint64_t encode(std::span<const FieldElement> v) const;
  void decode(std::uint64_t key, std::span<FieldElement> out) const;
  Vector decode(std::uint64_t key) const;

 private:
  std::uint32_t q_;
  std::uint32_t length_;
  std::uint64_t space_size_;
};

std::string format_vector(std::span<const FieldElement> v);

}  // namespace supchar

#endif  // SUPCHAR_ALGEBRA_HPP_
