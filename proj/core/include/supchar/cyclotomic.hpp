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

#ifndef SUPCHAR_CYCLOTOMIC_HPP_
#define SUPCHAR_CYCLOTOMIC_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "supchar/galois_field.hpp"

namespace supchar {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Z[x]/(Phi_m) bookkeeping shared by every CycloNumber of order m.
class CyclotomicRing {
 public:
  // Interned per order; the returned reference lives for the whole program.
  static const CyclotomicRing& get(std::uint32_t order);

  std::uint32_t order() const { return order_; }
  std::uint32_t degree() const { return static_cast<std::uint32_t>(phi_.size() - 1); }
  // Phi_m, low to high, monic.
  const std::vector<std::int64_t>& phi() const { return phi_; }
  // x^j mod Phi_m for j in [0, m).
  const std::vector<std::int64_t>& power(std::uint32_t j) const { return powers_[j % order_]; }

  explicit CyclotomicRing(std::uint32_t order);

 private:
  std::uint32_t order_;
  std::vector<std::int64_t> phi_;
  std::vector<std::vector<std::int64_t>> powers_;
};

std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t m);

// An element of Q(zeta_m) in canonical form: rational coefficients of
// 1, z, ..., z^{deg Phi_m - 1} with z = zeta_m.
class CycloNumber {
 public:
  CycloNumber() : CycloNumber(1) {}
  explicit CycloNumber(std::uint32_t order);

  static CycloNumber zero(std::uint32_t order) { return CycloNumber(order); }
  static CycloNumber one(std::uint32_t order) { return from_rational(order, Rational(1)); }
  static CycloNumber root(std::uint32_t order, std::int64_t j);
  static CycloNumber from_rational(std::uint32_t order, const Rational& r);
  // sum_j counts[j] zeta^j, divided by `denominator`.
  static CycloNumber from_root_counts(std::uint32_t order, std::span<const std::int64_t> counts,
                                     const Rational& denominator = Rational(1));

  std::uint32_t order() const { return ring_->order(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  CycloNumber& operator+=(const CycloNumber& other);
  CycloNumber& operator-=(const CycloNumber& other);
  CycloNumber& operator*=(const CycloNumber& other);
  CycloNumber& operator*=(const Rational& scalar);
  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  friend CycloNumber operator*(CycloNumber a, const Rational& s) { return a *= s; }
  CycloNumber operator-() const;

  // Complex conjugation: zeta -> zeta^{m-1}.
  CycloNumber conj() const;

  bool is_zero() const;
  bool is_rational() const;
  // Throws std::domain_error if the value is not rational.
  Rational to_rational() const;

  friend bool operator==(const CycloNumber& a, const CycloNumber& b);

  // "a_0 + a_1*z + ... + a_{d-1}*z^{d-1}" with zero terms suppressed; "0" for zero.
  std::string to_string() const;

 private:
  void require_same_order(const CycloNumber& other) const;

  const CyclotomicRing* ring_;
  std::vector<Rational> coeffs_;
};

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

// zeta_p^{Tr(c)} embedded at order m (requires p | m).
CycloNumber additive_char(const GaloisField& field, FieldElement c, std::uint32_t order);
// zeta_{q-1}^{exponent * dlog(h)} embedded at order m (requires (q-1) | m).
CycloNumber mult_char(const GaloisField& field, std::uint64_t exponent, FieldElement h,
                      std::uint32_t order);

}  // namespace supchar

#endif  // SUPCHAR_CYCLOTOMIC_HPP_
