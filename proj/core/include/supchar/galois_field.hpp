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

#ifndef SUPCHAR_GALOIS_FIELD_HPP_
#define SUPCHAR_GALOIS_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace supchar {

// An element of GF(p^k). For k = 1 `value` is the residue; for k > 1 it packs
// the coefficient vector c_0 + c_1 x + ... as sum c_i p^i.
struct FieldElement {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

enum class FieldOp { kAdd, kSub, kMul, kDiv, kInv, kNeg };

// Finite field GF(p^k) backed by discrete exponential/logarithm tables.
// Immutable after construction.
class GaloisField {
 public:
  static constexpr std::uint64_t kDefaultMaxSize = std::uint64_t{1} << 16;

  struct Options {
    std::uint64_t max_size = kDefaultMaxSize;
    // Low-to-high coefficients c_0..c_{k-1} of a monic modulus
    // x^k + c_{k-1} x^{k-1} + ... + c_0. Ignored for k = 1.
    std::optional<std::vector<std::uint32_t>> modulus;
    // Packed value of the multiplicative generator.
    std::optional<std::uint32_t> generator;
  };

  GaloisField(std::uint32_t p, std::uint32_t k, const Options& options);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t size() const { return q_; }
  // Full monic modulus, low to high, length k + 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  FieldElement generator() const { return generator_; }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }
  // Image of an integer under Z -> GF(p) -> GF(q).
  FieldElement from_int(std::int64_t n) const;

  FieldElement add(FieldElement a, FieldElement b) const {
    if (!add_table_.empty()) return FieldElement{add_table_[a.value * q_ + b.value]};
    return add_slow(a, b);
  }
  FieldElement neg(FieldElement a) const { return FieldElement{neg_table_[a.value]}; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.value == 0 || b.value == 0) return FieldElement{0};
    std::uint32_t s = log_table_[a.value] + log_table_[b.value];
    if (s >= q_ - 1) s -= q_ - 1;
    return FieldElement{exp_table_[s]};
  }
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  // generator^dlog(a) == a; throws LogOfZero for a == 0.
  std::uint32_t dlog(FieldElement a) const;
  FieldElement exp(std::uint64_t j) const { return FieldElement{exp_table_[j % (q_ - 1)]}; }
  // Absolute trace GF(q) -> GF(p), returned as a residue in [0, p).
  std::uint32_t trace(FieldElement a) const { return trace_table_[a.value]; }

  std::vector<std::uint32_t> digits(FieldElement a) const;
  FieldElement from_digits(std::span<const std::uint32_t> digits) const;
  bool contains(FieldElement a) const { return a.value < q_; }

  // Decimal packed value; used in label strings.
  std::string to_string(FieldElement a) const;

 private:
  FieldElement add_slow(FieldElement a, FieldElement b) const;
  bool build_tables(FieldElement generator);

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  FieldElement generator_;
  std::vector<std::uint32_t> exp_table_;
  std::vector<std::uint32_t> log_table_;
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> neg_table_;
  std::vector<std::uint32_t> trace_table_;
};

using FieldSpec = std::shared_ptr<const GaloisField>;

bool is_prime(std::uint64_t n);

// GF(p^k) with the lexicographically smallest primitive modulus (ordered by
// packed tail value) and, for k = 1, the smallest primitive root.
FieldSpec field_make(std::uint32_t p, std::uint32_t k,
                     std::uint64_t max_size = GaloisField::kDefaultMaxSize);
FieldSpec field_make(std::uint32_t p, std::uint32_t k, const GaloisField::Options& options);

// Dispatches one arithmetic operation; `b` is required for binary ops.
FieldElement field_op(const GaloisField& field, FieldOp op, FieldElement a,
                      std::optional<FieldElement> b = std::nullopt);

}  // namespace supchar

#endif  // SUPCHAR_GALOIS_FIELD_HPP_
