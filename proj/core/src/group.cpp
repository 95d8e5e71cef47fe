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

#include "supchar/group.hpp"

#include <algorithm>

#include "supchar/error.hpp"

namespace supchar {
namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > (std::uint64_t{1} << 62) / a) return 0;
  return a * b;
}

void check_bound(std::uint64_t order, std::uint64_t bound, const char* what) {
  if (order == 0 || order > bound)
    throw Error(ErrorCode::kGroupTooLarge,
                std::string(what) + " has " + (order == 0 ? std::string("too many") : std::to_string(order)) +
                    " elements, above the enumeration bound of " + std::to_string(bound));
}

}  // namespace

std::uint64_t unit_group_order(const Algebra& alg) {
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < alg.block_count(); ++i) order = checked_mul(order, alg.block_unit_count(i));
  const VectorCodec rad(alg.field().size(), alg.radical_dim());
  return checked_mul(order, rad.space_size());
}

FiniteGroup FiniteGroup::units(const Algebra& alg, std::uint64_t bound) {
  check_bound(unit_group_order(alg), bound, "the unit group");
  const VectorCodec codec(alg.field().size(), alg.dim());
  // Every unit is (unit of S) + (anything in J).
  std::vector<AlgebraElement> s_units{alg.zero()};
  for (std::uint32_t i = 0; i < alg.block_count(); ++i) {
    std::vector<AlgebraElement> next;
    const auto units = alg.block_units(i);
    for (const auto& s : s_units)
      for (const auto& u : units) next.push_back(alg.add(s, u));
    s_units = std::move(next);
  }
  const VectorCodec rad(alg.field().size(), alg.radical_dim());
  std::vector<std::uint64_t> keys;
  keys.reserve(s_units.size() * rad.space_size());
  for (const auto& s : s_units)
    for (std::uint64_t r = 0; r < rad.space_size(); ++r)
      keys.push_back(codec.encode(alg.add(s, alg.from_radical(rad.decode(r))).coeffs));
  std::sort(keys.begin(), keys.end());
  return FiniteGroup(alg, std::move(keys));
}

FiniteGroup FiniteGroup::unipotent(const Algebra& alg, std::uint64_t bound) {
  const VectorCodec rad(alg.field().size(), alg.radical_dim());
  check_bound(rad.space_size(), bound, "the unipotent group");
  const VectorCodec codec(alg.field().size(), alg.dim());
  std::vector<std::uint64_t> keys;
  for (std::uint64_t r = 0; r < rad.space_size(); ++r)
    keys.push_back(codec.encode(alg.add(alg.one(), alg.from_radical(rad.decode(r))).coeffs));
  std::sort(keys.begin(), keys.end());
  FiniteGroup g(alg, std::move(keys));
  g.unipotent_ = true;
  return g;
}

FiniteGroup::FiniteGroup(const Algebra& alg, std::vector<std::uint64_t> keys)
    : alg_(&alg), codec_(alg.field().size(), alg.dim()), keys_(std::move(keys)), index_(codec_.space_size()) {
  elements_.reserve(keys_.size());
  for (std::uint32_t i = 0; i < keys_.size(); ++i) {
    elements_.push_back(AlgebraElement{codec_.decode(keys_[i])});
    index_.set(keys_[i], i);
  }
  identity_ = index_of(alg.one().coeffs);
  inverse_.assign(keys_.size(), KeyIndex::kAbsent);
  for (std::uint32_t i = 0; i < keys_.size(); ++i) {
    if (inverse_[i] != KeyIndex::kAbsent) continue;
    const auto inv = invert(alg, elements_[i]);
    const auto j = index_of(inv.inverse.coeffs);
    if (j == KeyIndex::kAbsent) throw Error(ErrorCode::kNotInvertible, "group is not closed under inverses");
    inverse_[i] = j;
    inverse_[j] = i;
  }
}

std::uint32_t FiniteGroup::multiply(std::uint32_t i, std::uint32_t j) const {
  return index_of(alg_->mul(elements_[i], elements_[j]).coeffs);
}

Matrix FiniteGroup::conjugation_matrix(std::uint32_t g) const {
  const auto& alg = *alg_;
  const auto& a = elements_[g];
  const auto& b = elements_[inverse_[g]];
  Matrix m(alg.dim(), alg.dim());
  for (std::uint32_t c = 0; c < alg.dim(); ++c) {
    const auto img = alg.mul(alg.mul(a, alg.basis(c)), b);
    for (std::uint32_t r = 0; r < alg.dim(); ++r) m(r, c) = img.coeffs[r];
  }
  return m;
}

std::vector<std::uint32_t> FiniteGroup::generators() const {
  const auto& alg = *alg_;
  std::vector<std::uint32_t> out;
  if (!unipotent_) {
    for (std::uint32_t i = 0; i < alg.block_count(); ++i) {
      AlgebraElement t = alg.block_generator(i);
      for (std::uint32_t j = 0; j < alg.block_count(); ++j)
        if (j != i) t = alg.add(t, alg.idempotent(Idempotent{1u << j}));
      out.push_back(index_of(t.coeffs));
    }
  }
  for (const auto& tau : generating_triples(alg))
    if (tau.t.element.coeffs == alg.one().coeffs && tau.b.element.coeffs == alg.one().coeffs &&
        tau.a.element.coeffs != alg.one().coeffs)
      out.push_back(index_of(tau.a.element.coeffs));
  return out;
}

std::vector<std::vector<std::uint32_t>> FiniteGroup::conjugacy_classes() const {
  std::vector<Matrix> conj;
  for (auto g : generators()) conj.push_back(conjugation_matrix(g));
  const auto& f = alg_->field();
  std::vector<std::uint32_t> class_of(size(), KeyIndex::kAbsent);
  std::vector<std::vector<std::uint32_t>> out;
  Vector y(alg_->dim());
  for (std::uint32_t seed = 0; seed < size(); ++seed) {
    if (class_of[seed] != KeyIndex::kAbsent) continue;
    const auto id = static_cast<std::uint32_t>(out.size());
    std::vector<std::uint32_t> members{seed};
    class_of[seed] = id;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (const auto& m : conj) {
        m.apply_into(f, elements_[members[i]].coeffs, y);
        const auto j = index_of(y);
        if (class_of[j] == KeyIndex::kAbsent) {
          class_of[j] = id;
          members.push_back(j);
        }
      }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace supchar
