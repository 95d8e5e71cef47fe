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

#include "supchar/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "supchar/error.hpp"

namespace supchar {
namespace {

// Exact quotient of `num` by the monic `den` (both low to high).
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num,
                                       const std::vector<std::int64_t>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> quot(num.size() - dn, 0);
  for (std::size_t top = num.size(); top-- > dn;) {
    const std::int64_t c = num[top];
    quot[top - dn] = c;
    for (std::size_t t = 0; t <= dn; ++t) num[top - dn + t] -= c * den[t];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  return quot;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t m) {
  if (m == 0) throw Error(ErrorCode::kBadOrder, "cyclotomic order must be positive");
  std::vector<std::int64_t> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (std::uint32_t d = 1; d < m; ++d)
    if (m % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
  return poly;
}

CyclotomicRing::CyclotomicRing(std::uint32_t order) : order_(order), phi_(cyclotomic_polynomial(order)) {
  const std::uint32_t deg = degree();
  powers_.assign(order, std::vector<std::int64_t>(deg, 0));
  std::vector<std::int64_t> cur(deg, 0);
  cur[0] = 1;
  for (std::uint32_t j = 0; j < order; ++j) {
    powers_[j] = cur;
    // cur *= x, then reduce the x^deg term.
    const std::int64_t top = cur[deg - 1];
    for (std::uint32_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (std::uint32_t i = 0; i < deg; ++i) cur[i] -= top * phi_[i];
  }
}

const CyclotomicRing& CyclotomicRing::get(std::uint32_t order) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::unique_ptr<CyclotomicRing>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<CyclotomicRing>(order);
  return *slot;
}

CycloNumber::CycloNumber(std::uint32_t order)
    : ring_(&CyclotomicRing::get(order)), coeffs_(ring_->degree(), Rational(0)) {}

CycloNumber CycloNumber::root(std::uint32_t order, std::int64_t j) {
  CycloNumber r(order);
  std::int64_t e = j % static_cast<std::int64_t>(order);
  if (e < 0) e += order;
  const auto& pw = r.ring_->power(static_cast<std::uint32_t>(e));
  for (std::size_t i = 0; i < pw.size(); ++i) r.coeffs_[i] = pw[i];
  return r;
}

CycloNumber CycloNumber::from_rational(std::uint32_t order, const Rational& value) {
  CycloNumber r(order);
  r.coeffs_[0] = value;
  return r;
}

CycloNumber CycloNumber::from_root_counts(std::uint32_t order, std::span<const std::int64_t> counts,
                                          const Rational& denominator) {
  CycloNumber r(order);
  const std::uint32_t deg = r.ring_->degree();
  std::vector<std::int64_t> acc(deg, 0);
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] == 0) continue;
    const auto& pw = r.ring_->power(static_cast<std::uint32_t>(j % order));
    for (std::uint32_t i = 0; i < deg; ++i) acc[i] += counts[j] * pw[i];
  }
  for (std::uint32_t i = 0; i < deg; ++i) r.coeffs_[i] = Rational(acc[i]) / denominator;
  return r;
}

void CycloNumber::require_same_order(const CycloNumber& other) const {
  if (ring_ != other.ring_)
    throw Error(ErrorCode::kOrderMismatch, "orders " + std::to_string(order()) + " and " +
                                               std::to_string(other.order()));
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& other) {
  require_same_order(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& other) {
  require_same_order(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& other) {
  require_same_order(other);
  const std::size_t deg = coeffs_.size();
  std::vector<Rational> prod(2 * deg - 1, Rational(0));
  for (std::size_t i = 0; i < deg; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j)
      if (other.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  const auto& phi = ring_->phi();
  for (std::size_t top = prod.size(); top-- > deg;) {
    if (prod[top] == 0) continue;
    const Rational c = prod[top];
    for (std::size_t t = 0; t <= deg; ++t) prod[top - deg + t] -= c * phi[t];
  }
  prod.resize(deg);
  coeffs_ = std::move(prod);
  return *this;
}

CycloNumber& CycloNumber::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloNumber CycloNumber::conj() const {
  CycloNumber r(order());
  const std::uint32_t m = order();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& pw = ring_->power(static_cast<std::uint32_t>((m - i % m) % m));
    for (std::size_t t = 0; t < pw.size(); ++t)
      if (pw[t] != 0) r.coeffs_[t] += coeffs_[i] * pw[t];
  }
  return r;
}

bool CycloNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational CycloNumber::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value " + to_string() + " is not rational");
  return coeffs_[0];
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

std::string CycloNumber::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += coeffs_[i].str();
    if (i == 1) out += "*z";
    if (i > 1) out += "*z^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

CycloNumber additive_char(const GaloisField& field, FieldElement c, std::uint32_t order) {
  const std::uint32_t p = field.characteristic();
  if (order % p != 0)
    throw Error(ErrorCode::kBadOrder, "order " + std::to_string(order) + " not divisible by p");
  return CycloNumber::root(order, std::int64_t{order / p} * field.trace(c));
}

CycloNumber mult_char(const GaloisField& field, std::uint64_t exponent, FieldElement h,
                      std::uint32_t order) {
  const std::uint32_t n = field.size() - 1;
  if (order % n != 0)
    throw Error(ErrorCode::kBadOrder, "order " + std::to_string(order) + " not divisible by q-1");
  const std::uint64_t e = (exponent % n) * field.dlog(h) % n;
  return CycloNumber::root(order, static_cast<std::int64_t>(e * (order / n)));
}

}  // namespace supchar
