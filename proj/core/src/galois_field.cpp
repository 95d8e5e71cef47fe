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

#include "supchar/galois_field.hpp"

#include <algorithm>
#include <stdexcept>

#include "supchar/error.hpp"

namespace supchar {
namespace {

constexpr std::uint32_t kAddTableMaxSize = 256;

std::vector<std::uint32_t> unpack(std::uint32_t v, std::uint32_t p, std::uint32_t k) {
  std::vector<std::uint32_t> d(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

std::uint32_t pack(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

// Product of two packed polynomials modulo the monic `modulus` over GF(p).
std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p, std::uint32_t k,
                          const std::vector<std::uint32_t>& modulus) {
  const auto da = unpack(a, p, k);
  const auto db = unpack(b, p, k);
  std::vector<std::uint64_t> prod(2 * k - 1, 0);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (std::size_t top = prod.size(); top-- > k;) {
    const std::uint64_t c = prod[top];
    if (c == 0) continue;
    prod[top] = 0;
    for (std::uint32_t t = 0; t < k; ++t) {
      const std::size_t idx = top - k + t;
      prod[idx] = (prod[idx] + (p - c) * modulus[t]) % p;
    }
  }
  std::vector<std::uint32_t> r(k);
  for (std::uint32_t i = 0; i < k; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
  return pack(r, p);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t k, const Options& options) : p_(p), k_(k) {
  if (!is_prime(p)) throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorCode::kDegreeTooLarge, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > options.max_size)
      throw Error(ErrorCode::kDegreeTooLarge,
                  std::to_string(p) + "^" + std::to_string(k) + " exceeds the table bound " +
                      std::to_string(options.max_size));
  }
  q_ = static_cast<std::uint32_t>(q);

  if (k == 1) {
    std::optional<FieldElement> gen;
    if (options.generator) gen = FieldElement{*options.generator};
    modulus_ = {0, 1};
    if (gen) {
      if (gen->value >= q_ || !build_tables(*gen))
        throw Error(ErrorCode::kNotPrimitive, "requested generator is not a primitive root");
    } else {
      std::uint32_t g = 1;
      while (!build_tables(FieldElement{g})) ++g;
    }
    modulus_[0] = (p_ - generator_.value) % p_;
  } else if (options.modulus) {
    if (options.modulus->size() != k)
      throw Error(ErrorCode::kNotPrimitive, "modulus tail must have k coefficients");
    modulus_ = *options.modulus;
    modulus_.push_back(1);
    bool ok = false;
    if (options.generator) {
      ok = *options.generator < q_ && build_tables(FieldElement{*options.generator});
    } else {
      for (std::uint32_t g = 2; g < q_ && !ok; ++g) ok = build_tables(FieldElement{g});
    }
    if (!ok) throw Error(ErrorCode::kNotPrimitive, "modulus is reducible or generator not primitive");
  } else {
    bool ok = false;
    for (std::uint32_t tail = 0; tail < q_ && !ok; ++tail) {
      if (tail % p_ == 0) continue;  // x divides the polynomial
      modulus_ = unpack(tail, p_, k_);
      modulus_.push_back(1);
      ok = build_tables(FieldElement{p_});  // the class of x
    }
    if (!ok) throw Error(ErrorCode::kNotPrimitive, "no primitive modulus found");
    if (options.generator) {
      if (*options.generator >= q_ || !build_tables(FieldElement{*options.generator}))
        throw Error(ErrorCode::kNotPrimitive, "requested generator is not primitive");
    }
  }

  neg_table_.resize(q_);
  for (std::uint32_t v = 0; v < q_; ++v) {
    auto d = unpack(v, p_, k_);
    for (auto& c : d) c = (p_ - c) % p_;
    neg_table_[v] = pack(d, p_);
  }
  if (q_ <= kAddTableMaxSize) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b)
        add_table_[a * q_ + b] = add_slow(FieldElement{a}, FieldElement{b}).value;
  }
  trace_table_.resize(q_);
  for (std::uint32_t v = 0; v < q_; ++v) {
    FieldElement acc{0};
    FieldElement term{v};
    for (std::uint32_t i = 0; i < k_; ++i) {
      acc = add(acc, term);
      term = pow(term, p_);
    }
    trace_table_[v] = acc.value;  // lies in the prime field
  }
}

bool GaloisField::build_tables(FieldElement generator) {
  if (generator.value == 0) return false;
  std::vector<std::uint32_t> exp(q_ - 1);
  std::vector<std::uint32_t> log(q_, 0);
  std::vector<bool> seen(q_, false);
  std::uint32_t cur = 1;
  for (std::uint32_t j = 0; j + 1 < q_; ++j) {
    if (cur == 0 || seen[cur]) return false;
    seen[cur] = true;
    exp[j] = cur;
    log[cur] = j;
    cur = k_ == 1 ? static_cast<std::uint32_t>(std::uint64_t{cur} * generator.value % p_)
                  : poly_mulmod(cur, generator.value, p_, k_, modulus_);
  }
  if (cur != 1) return false;
  exp_table_ = std::move(exp);
  log_table_ = std::move(log);
  generator_ = generator;
  return true;
}

FieldElement GaloisField::add_slow(FieldElement a, FieldElement b) const {
  if (k_ == 1) return FieldElement{(a.value + b.value) % p_};
  std::uint32_t r = 0;
  std::uint32_t scale = 1;
  std::uint32_t x = a.value;
  std::uint32_t y = b.value;
  for (std::uint32_t i = 0; i < k_; ++i) {
    r += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return FieldElement{r};
}

FieldElement GaloisField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return FieldElement{static_cast<std::uint32_t>(r)};
}

FieldElement GaloisField::inv(FieldElement a) const {
  if (a.value == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  const std::uint32_t l = log_table_[a.value];
  return FieldElement{exp_table_[l == 0 ? 0 : q_ - 1 - l]};
}

FieldElement GaloisField::pow(FieldElement a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.value == 0) return zero();
  const std::uint64_t l = (std::uint64_t{log_table_[a.value]} * (e % (q_ - 1))) % (q_ - 1);
  return FieldElement{exp_table_[l]};
}

std::uint32_t GaloisField::dlog(FieldElement a) const {
  if (a.value == 0) throw Error(ErrorCode::kLogOfZero, "discrete log of zero");
  return log_table_[a.value];
}

std::vector<std::uint32_t> GaloisField::digits(FieldElement a) const { return unpack(a.value, p_, k_); }

FieldElement GaloisField::from_digits(std::span<const std::uint32_t> digits) const {
  std::vector<std::uint32_t> d(k_, 0);
  for (std::size_t i = 0; i < digits.size() && i < k_; ++i) d[i] = digits[i] % p_;
  return FieldElement{pack(d, p_)};
}

std::string GaloisField::to_string(FieldElement a) const { return std::to_string(a.value); }

FieldSpec field_make(std::uint32_t p, std::uint32_t k, std::uint64_t max_size) {
  GaloisField::Options options;
  options.max_size = max_size;
  return std::make_shared<const GaloisField>(p, k, options);
}

FieldSpec field_make(std::uint32_t p, std::uint32_t k, const GaloisField::Options& options) {
  return std::make_shared<const GaloisField>(p, k, options);
}

FieldElement field_op(const GaloisField& field, FieldOp op, FieldElement a,
                      std::optional<FieldElement> b) {
  auto rhs = [&]() {
    if (!b) throw std::invalid_argument("binary field operation needs two operands");
    return *b;
  };
  switch (op) {
    case FieldOp::kAdd: return field.add(a, rhs());
    case FieldOp::kSub: return field.sub(a, rhs());
    case FieldOp::kMul: return field.mul(a, rhs());
    case FieldOp::kDiv: return field.div(a, rhs());
    case FieldOp::kInv: return field.inv(a);
    case FieldOp::kNeg: return field.neg(a);
  }
  return a;
}

}  // namespace supchar
