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

#include "supchar/algebra.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "supchar/error.hpp"

namespace supchar {
namespace {

constexpr std::uint64_t kMaxBlockFieldSize = std::uint64_t{1} << 16;

std::string at(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

bool equal(const AlgebraElement& a, const AlgebraElement& b) { return a.coeffs == b.coeffs; }

std::string name_basis(std::uint32_t i) { return "b" + std::to_string(i); }

void check_structure(const AlgebraSpec& s) {
  auto malformed = [](const std::string& msg, const std::string& path) {
    throw Error(ErrorCode::kMalformedSpec, msg, path);
  };
  if (!s.field) malformed("missing field", "/p");
  const auto& f = *s.field;
  if (s.dim == 0) malformed("dimension must be positive", "/dim");
  auto check_vec = [&](const Vector& v, const std::string& path) {
    if (v.size() != s.dim) malformed("expected " + std::to_string(s.dim) + " coefficients", path);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!f.contains(v[i])) malformed("coefficient outside the field", at(path, i));
  };
  check_vec(s.unit, "/unit");
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (std::size_t k = 0; k < s.mul.size(); ++k) {
    const auto& e = s.mul[k];
    const std::string path = at("/mul", k);
    if (e.left >= s.dim) malformed("basis index out of range", path + "/0");
    if (e.right >= s.dim) malformed("basis index out of range", path + "/1");
    if (!seen.insert({e.left, e.right}).second) malformed("duplicate product entry", path);
    for (std::size_t t = 0; t < e.terms.size(); ++t) {
      if (e.terms[t].index >= s.dim) malformed("basis index out of range", at(path + "/2", t) + "/0");
      if (!f.contains(e.terms[t].coeff)) malformed("coefficient outside the field", at(path + "/2", t) + "/1");
    }
  }
  if (s.blocks.empty()) malformed("at least one block is required", "/blocks");
  if (s.blocks.size() > 16) malformed("at most 16 blocks are supported", "/blocks");
  for (std::size_t b = 0; b < s.blocks.size(); ++b) {
    const auto& blk = s.blocks[b];
    const std::string path = at("/blocks", b);
    check_vec(blk.idempotent, path + "/idempotent");
    if (blk.degree == 0) malformed("block degree must be positive", path + "/degree");
    if (blk.basis.size() != blk.degree)
      malformed("block basis must have exactly `degree` elements", path + "/basis");
    for (std::size_t i = 0; i < blk.basis.size(); ++i)
      if (blk.basis[i] >= s.dim) malformed("basis index out of range", at(path + "/basis", i));
  }
  for (std::size_t i = 0; i < s.radical_basis.size(); ++i)
    if (s.radical_basis[i] >= s.dim) malformed("basis index out of range", at("/radical_basis", i));
}

}  // namespace

AlgebraElement Algebra::basis(std::uint32_t i) const {
  AlgebraElement e = zero();
  e.coeffs[i] = field().one();
  return e;
}

AlgebraElement Algebra::idempotent(Idempotent e) const {
  AlgebraElement out = zero();
  for (std::uint32_t i = 0; i < block_count(); ++i)
    if (e.has_block(i)) out = add(out, AlgebraElement{spec_.blocks[i].idempotent});
  return out;
}

void Algebra::mul_into(std::span<const FieldElement> x, std::span<const FieldElement> y,
                       std::span<FieldElement> out) const {
  const auto& f = field();
  const std::uint32_t d = dim();
  std::fill(out.begin(), out.end(), FieldElement{0});
  for (std::uint32_t i = 0; i < d; ++i) {
    if (x[i].value == 0) continue;
    for (std::uint32_t j = 0; j < d; ++j) {
      if (y[j].value == 0) continue;
      const auto& terms = table_[i * d + j];
      if (terms.empty()) continue;
      const FieldElement xy = f.mul(x[i], y[j]);
      for (const auto& t : terms) out[t.index] = f.add(out[t.index], f.mul(xy, t.coeff));
    }
  }
}

AlgebraElement Algebra::mul(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement out = zero();
  mul_into(x.coeffs, y.coeffs, out.coeffs);
  return out;
}

AlgebraElement Algebra::add(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement out = x;
  for (std::uint32_t i = 0; i < dim(); ++i) out.coeffs[i] = field().add(x.coeffs[i], y.coeffs[i]);
  return out;
}

AlgebraElement Algebra::sub(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement out = x;
  for (std::uint32_t i = 0; i < dim(); ++i) out.coeffs[i] = field().sub(x.coeffs[i], y.coeffs[i]);
  return out;
}

AlgebraElement Algebra::scale(FieldElement c, const AlgebraElement& x) const {
  AlgebraElement out = x;
  for (auto& v : out.coeffs) v = field().mul(c, v);
  return out;
}

AlgebraElement Algebra::s_part(const AlgebraElement& x) const {
  AlgebraElement out = x;
  for (auto i : spec_.radical_basis) out.coeffs[i] = FieldElement{0};
  return out;
}

AlgebraElement Algebra::j_part(const AlgebraElement& x) const {
  AlgebraElement out = zero();
  for (auto i : spec_.radical_basis) out.coeffs[i] = x.coeffs[i];
  return out;
}

bool Algebra::in_radical(const AlgebraElement& x) const {
  for (std::uint32_t i = 0; i < dim(); ++i)
    if (radical_position_[i] < 0 && x.coeffs[i].value != 0) return false;
  return true;
}

Vector Algebra::radical_coords(const AlgebraElement& x) const {
  Vector v(radical_dim());
  for (std::uint32_t k = 0; k < radical_dim(); ++k) v[k] = x.coeffs[spec_.radical_basis[k]];
  return v;
}

AlgebraElement Algebra::from_radical(std::span<const FieldElement> coords) const {
  AlgebraElement out = zero();
  for (std::uint32_t k = 0; k < radical_dim(); ++k) out.coeffs[spec_.radical_basis[k]] = coords[k];
  return out;
}

FieldElement Algebra::evaluate(const DualForm& form, const AlgebraElement& x) const {
  FieldElement acc{0};
  for (std::uint32_t k = 0; k < radical_dim(); ++k)
    acc = field().add(acc, field().mul(form.coeffs[k], x.coeffs[spec_.radical_basis[k]]));
  return acc;
}

Matrix Algebra::left_mul_matrix(const AlgebraElement& a) const {
  Matrix m(dim(), dim());
  for (std::uint32_t j = 0; j < dim(); ++j) {
    const auto col = mul(a, basis(j));
    for (std::uint32_t i = 0; i < dim(); ++i) m(i, j) = col.coeffs[i];
  }
  return m;
}

Matrix Algebra::right_mul_matrix(const AlgebraElement& a) const {
  Matrix m(dim(), dim());
  for (std::uint32_t j = 0; j < dim(); ++j) {
    const auto col = mul(basis(j), a);
    for (std::uint32_t i = 0; i < dim(); ++i) m(i, j) = col.coeffs[i];
  }
  return m;
}

Vector Algebra::block_component(const AlgebraElement& x, std::uint32_t i) const {
  const auto& idx = spec_.blocks[i].basis;
  Vector v(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) v[k] = x.coeffs[idx[k]];
  return v;
}

std::uint64_t Algebra::block_dlog(std::uint32_t i, const AlgebraElement& h) const {
  const Vector comp = block_component(h, i);
  if (is_zero_vector(comp)) throw Error(ErrorCode::kLogOfZero, "block component is zero");
  const VectorCodec codec(field().size(), static_cast<std::uint32_t>(comp.size()));
  return block_dlog_[i][codec.encode(comp)];
}

std::vector<AlgebraElement> Algebra::block_units(std::uint32_t i) const {
  const auto& idx = spec_.blocks[i].basis;
  const VectorCodec codec(field().size(), static_cast<std::uint32_t>(idx.size()));
  std::vector<AlgebraElement> out;
  Vector comp(idx.size());
  for (std::uint64_t key = 1; key < codec.space_size(); ++key) {
    codec.decode(key, comp);
    AlgebraElement e = zero();
    for (std::size_t k = 0; k < idx.size(); ++k) e.coeffs[idx[k]] = comp[k];
    out.push_back(std::move(e));
  }
  return out;
}

Idempotent Algebra::support_of_s(const AlgebraElement& s) const {
  Idempotent out;
  for (std::uint32_t i = 0; i < block_count(); ++i)
    if (!is_zero_vector(block_component(s, i))) out.mask |= 1u << i;
  return out;
}

Algebra validate_algebra(AlgebraSpec raw) {
  check_structure(raw);
  Algebra alg;
  alg.spec_ = std::move(raw);
  const auto& s = alg.spec_;
  const auto& f = *s.field;
  const std::uint32_t d = s.dim;

  // Direct sum S + J on the level of basis indices.
  alg.radical_position_.assign(d, -1);
  alg.block_of_index_.assign(d, -1);
  std::vector<int> owner(d, 0);
  for (std::size_t b = 0; b < s.blocks.size(); ++b)
    for (auto i : s.blocks[b].basis) {
      if (owner[i]++) throw Error(ErrorCode::kNotDirectSum, "basis index " + std::to_string(i) + " used twice", at("/blocks", b) + "/basis");
      alg.block_of_index_[i] = static_cast<int>(b);
    }
  for (std::size_t k = 0; k < s.radical_basis.size(); ++k) {
    const auto i = s.radical_basis[k];
    if (owner[i]++) throw Error(ErrorCode::kNotDirectSum, "basis index " + std::to_string(i) + " lies in both S and J", at("/radical_basis", k));
    alg.radical_position_[i] = static_cast<int>(k);
  }
  for (std::uint32_t i = 0; i < d; ++i)
    if (owner[i] == 0)
      throw Error(ErrorCode::kNotDirectSum, "basis index " + std::to_string(i) + " belongs to neither S nor J", "/radical_basis");

  alg.table_.assign(static_cast<std::size_t>(d) * d, {});
  for (const auto& e : s.mul) {
    auto& slot = alg.table_[e.left * d + e.right];
    for (const auto& t : e.terms)
      if (t.coeff.value != 0) slot.push_back(t);
  }

  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j) {
      const auto bij = alg.mul(alg.basis(i), alg.basis(j));
      for (std::uint32_t k = 0; k < d; ++k) {
        const auto lhs = alg.mul(bij, alg.basis(k));
        const auto rhs = alg.mul(alg.basis(i), alg.mul(alg.basis(j), alg.basis(k)));
        if (!equal(lhs, rhs))
          throw Error(ErrorCode::kNotAssociative,
                      "(" + name_basis(i) + "*" + name_basis(j) + ")*" + name_basis(k) + " != " +
                          name_basis(i) + "*(" + name_basis(j) + "*" + name_basis(k) + ")",
                      "/mul");
      }
    }

  const AlgebraElement unit = alg.one();
  for (std::uint32_t i = 0; i < d; ++i) {
    if (!equal(alg.mul(unit, alg.basis(i)), alg.basis(i)) || !equal(alg.mul(alg.basis(i), unit), alg.basis(i)))
      throw Error(ErrorCode::kBadUnit, "unit is not a two-sided identity on " + name_basis(i), "/unit");
  }

  AlgebraElement sum = alg.zero();
  for (std::size_t a = 0; a < s.blocks.size(); ++a) {
    const AlgebraElement ea{s.blocks[a].idempotent};
    const std::string path = at("/blocks", a) + "/idempotent";
    for (std::uint32_t i = 0; i < d; ++i)
      if (ea.coeffs[i].value != 0 && alg.block_of_index_[i] != static_cast<int>(a))
        throw Error(ErrorCode::kBadIdempotents, "idempotent leaves the span of its block basis", path);
    for (std::size_t b = 0; b < s.blocks.size(); ++b) {
      const AlgebraElement eb{s.blocks[b].idempotent};
      const auto prod = alg.mul(ea, eb);
      if (!equal(prod, a == b ? ea : alg.zero()))
        throw Error(ErrorCode::kBadIdempotents,
                    a == b ? "e_" + std::to_string(a + 1) + " is not idempotent"
                           : "e_" + std::to_string(a + 1) + " e_" + std::to_string(b + 1) + " != 0",
                    path);
    }
    if (is_zero_vector(ea.coeffs)) throw Error(ErrorCode::kBadIdempotents, "idempotent is zero", path);
    sum = alg.add(sum, ea);
  }
  if (!equal(sum, unit)) throw Error(ErrorCode::kBadIdempotents, "idempotents do not sum to 1", "/blocks");

  // S is commutative and every block is a field with unit e_i.
  std::vector<std::uint32_t> s_indices;
  for (const auto& blk : s.blocks) s_indices.insert(s_indices.end(), blk.basis.begin(), blk.basis.end());
  for (auto i : s_indices)
    for (auto j : s_indices)
      if (!equal(alg.mul(alg.basis(i), alg.basis(j)), alg.mul(alg.basis(j), alg.basis(i))))
        throw Error(ErrorCode::kSNotCommutative,
                    name_basis(i) + "*" + name_basis(j) + " != " + name_basis(j) + "*" + name_basis(i),
                    at("/blocks", alg.block_of_index_[i]) + "/basis");
  for (std::size_t b = 0; b < s.blocks.size(); ++b) {
    const auto& blk = s.blocks[b];
    const std::string path = at("/blocks", b);
    const AlgebraElement eb{blk.idempotent};
    for (auto i : blk.basis) {
      if (!equal(alg.mul(eb, alg.basis(i)), alg.basis(i)))
        throw Error(ErrorCode::kSNotCommutative, "e_" + std::to_string(b + 1) + " is not the unit of its block", path);
      for (auto j : blk.basis) {
        const auto prod = alg.mul(alg.basis(i), alg.basis(j));
        for (std::uint32_t k = 0; k < d; ++k)
          if (prod.coeffs[k].value != 0 && alg.block_of_index_[k] != static_cast<int>(b))
            throw Error(ErrorCode::kSNotCommutative, "block is not closed under multiplication", path + "/basis");
      }
    }
    std::uint64_t size = 1;
    for (std::uint32_t t = 0; t < blk.degree; ++t) {
      size *= f.size();
      if (size > kMaxBlockFieldSize)
        throw Error(ErrorCode::kDegreeTooLarge, "block field too large", path + "/degree");
    }
    for (const auto& x : alg.block_units(static_cast<std::uint32_t>(b))) {
      Matrix lm(blk.degree, blk.degree);
      for (std::uint32_t c = 0; c < blk.degree; ++c) {
        const auto col = alg.mul(x, alg.basis(blk.basis[c]));
        for (std::uint32_t r = 0; r < blk.degree; ++r) lm(r, c) = col.coeffs[blk.basis[r]];
      }
      if (rank(f, lm) != blk.degree)
        throw Error(ErrorCode::kSNotCommutative, "block has zero divisors, so it is not a field", path);
    }
  }

  // J is a nilpotent two-sided ideal.
  for (std::size_t k = 0; k < s.radical_basis.size(); ++k) {
    const auto r = s.radical_basis[k];
    for (std::uint32_t i = 0; i < d; ++i) {
      if (!alg.in_radical(alg.mul(alg.basis(i), alg.basis(r))) || !alg.in_radical(alg.mul(alg.basis(r), alg.basis(i))))
        throw Error(ErrorCode::kRadicalNotNilpotent, "J is not a two-sided ideal", at("/radical_basis", k));
    }
  }
  std::vector<Vector> power;
  for (auto r : s.radical_basis) power.push_back(alg.basis(r).coeffs);
  std::uint32_t cls = 1;
  while (!power.empty()) {
    if (cls > d + 1) throw Error(ErrorCode::kRadicalNotNilpotent, "J^k never vanishes", "/radical_basis");
    std::vector<Vector> next;
    for (const auto& x : power)
      for (auto r : s.radical_basis) {
        auto prod = alg.mul(AlgebraElement{x}, alg.basis(r));
        if (!is_zero_vector(prod.coeffs)) next.push_back(std::move(prod.coeffs));
      }
    power = row_space_basis(f, next);
    ++cls;
  }
  alg.nilpotency_class_ = cls;

  // Block generators and discrete logarithms.
  alg.h_exponent_ = 1;
  for (std::uint32_t b = 0; b < alg.block_count(); ++b) {
    const auto& blk = s.blocks[b];
    const VectorCodec codec(f.size(), blk.degree);
    const std::uint64_t units = codec.space_size() - 1;
    alg.block_unit_count_.push_back(units);
    const AlgebraElement eb{blk.idempotent};
    auto try_generator = [&](const AlgebraElement& g, std::vector<std::uint32_t>& table) {
      table.assign(codec.space_size(), 0);
      std::vector<bool> seen(codec.space_size(), false);
      AlgebraElement cur = eb;
      for (std::uint64_t j = 0; j < units; ++j) {
        const auto key = codec.encode(alg.block_component(cur, b));
        if (key == 0 || seen[key]) return false;
        seen[key] = true;
        table[key] = static_cast<std::uint32_t>(j);
        cur = alg.mul(cur, g);
      }
      return equal(cur, eb);
    };
    std::vector<std::uint32_t> table;
    AlgebraElement gen;
    bool found = false;
    if (blk.degree == 1) {
      gen = alg.scale(f.generator(), eb);
      found = try_generator(gen, table);
    } else {
      for (const auto& cand : alg.block_units(b))
        if (try_generator(cand, table)) {
          gen = cand;
          found = true;
          break;
        }
    }
    if (!found) throw Error(ErrorCode::kSNotCommutative, "block unit group is not cyclic", at("/blocks", b));
    alg.block_generator_.push_back(gen);
    alg.block_dlog_.push_back(std::move(table));
    alg.h_exponent_ = std::lcm(alg.h_exponent_, units);
  }
  const std::uint64_t m = std::lcm<std::uint64_t>(f.characteristic(), alg.h_exponent_);
  if (m > (1u << 20)) throw Error(ErrorCode::kDegreeTooLarge, "cyclotomic order too large", "/blocks");
  alg.cyclotomic_order_ = static_cast<std::uint32_t>(m);
  return alg;
}

GroupElement invert(const Algebra& alg, const AlgebraElement& g) {
  const Matrix lm = alg.left_mul_matrix(g);
  const auto y = solve(alg.field(), lm, alg.one().coeffs);
  if (!y) throw Error(ErrorCode::kNotInvertible, "element " + format_vector(g.coeffs) + " has no inverse");
  AlgebraElement inv{*y};
  if (alg.mul(inv, g).coeffs != alg.one().coeffs)
    throw Error(ErrorCode::kNotInvertible, "left inverse differs from right inverse");
  return GroupElement{g, std::move(inv)};
}

VectorCodec::VectorCodec(std::uint32_t q, std::uint32_t length) : q_(q), length_(length) {
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < length; ++i) {
    if (size > (std::uint64_t{1} << 62) / q) {
      size = 0;
      break;
    }
    size *= q;
  }
  space_size_ = size;
}

std::uint64_t VectorCodec::encode(std::span<const FieldElement> v) const {
  std::uint64_t key = 0;
  for (std::uint32_t i = 0; i < length_; ++i) key = key * q_ + v[i].value;
  return key;
}

void VectorCodec::decode(std::uint64_t key, std::span<FieldElement> out) const {
  for (std::uint32_t i = length_; i-- > 0;) {
    out[i] = FieldElement{static_cast<std::uint32_t>(key % q_)};
    key /= q_;
  }
}

Vector VectorCodec::decode(std::uint64_t key) const {
  Vector v(length_);
  decode(key, v);
  return v;
}

std::string format_vector(std::span<const FieldElement> v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].value;
  os << ']';
  return os.str();
}

}  // namespace supchar
