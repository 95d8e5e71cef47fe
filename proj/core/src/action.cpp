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

#include "supchar/action.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "supchar/error.hpp"

namespace supchar {
namespace {

bool is_identity_s_part(const Algebra& alg, const AlgebraElement& a) {
  return alg.s_part(a).coeffs == alg.one().coeffs;
}

// Matrix of x -> l x r, restricted to J (radical coordinates) or on all of A.
Matrix sandwich_matrix(const Algebra& alg, const AlgebraElement& l, const AlgebraElement& r, bool radical) {
  const std::uint32_t n = radical ? alg.radical_dim() : alg.dim();
  Matrix m(n, n);
  for (std::uint32_t c = 0; c < n; ++c) {
    const auto basis = alg.basis(radical ? alg.radical_indices()[c] : c);
    const auto img = alg.mul(alg.mul(l, basis), r);
    if (radical) {
      const auto coords = alg.radical_coords(img);
      for (std::uint32_t k = 0; k < n; ++k) m(k, c) = coords[k];
    } else {
      for (std::uint32_t k = 0; k < n; ++k) m(k, c) = img.coeffs[k];
    }
  }
  return m;
}

AlgebraElement random_unit_of_h(const Algebra& alg, std::mt19937_64& rng) {
  AlgebraElement t = alg.zero();
  const auto& f = alg.field();
  for (std::uint32_t i = 0; i < alg.block_count(); ++i) {
    const auto& idx = alg.spec().blocks[i].basis;
    const VectorCodec codec(f.size(), static_cast<std::uint32_t>(idx.size()));
    std::uniform_int_distribution<std::uint64_t> dist(1, codec.space_size() - 1);
    const Vector comp = codec.decode(dist(rng));
    for (std::size_t k = 0; k < idx.size(); ++k) t.coeffs[idx[k]] = comp[k];
  }
  return t;
}

AlgebraElement random_unipotent(const Algebra& alg, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, alg.field().size() - 1);
  Vector coords(alg.radical_dim());
  for (auto& c : coords) c = FieldElement{dist(rng)};
  return alg.add(alg.one(), alg.from_radical(coords));
}

// Closure of {1} under right multiplication by `gens` inside N, as radical keys.
std::vector<std::uint64_t> subgroup_closure(const Algebra& alg, const std::vector<AlgebraElement>& gens,
                                            const VectorCodec& codec) {
  std::vector<bool> seen(codec.space_size(), false);
  std::vector<std::uint64_t> out{0};
  seen[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto x = alg.add(alg.one(), alg.from_radical(codec.decode(out[i])));
    for (const auto& g : gens) {
      const auto key = codec.encode(alg.radical_coords(alg.mul(x, g)));
      if (!seen[key]) {
        seen[key] = true;
        out.push_back(key);
      }
    }
  }
  return out;
}

Vector embed_form(const Algebra& alg, const CornerAlgebra& corner, const Vector& form) {
  // lambda(x) = lambda_f(f x f) expressed in the corner's radical coordinates.
  const auto& sub = *corner.algebra;
  Idempotent full;
  for (auto b : corner.blocks) full.mask |= 1u << b;
  const auto e = alg.idempotent(full);
  Vector out(alg.radical_dim());
  for (std::uint32_t l = 0; l < alg.radical_dim(); ++l) {
    const auto y = alg.mul(alg.mul(e, alg.basis(alg.radical_indices()[l])), e);
    const auto coords = solve(alg.field(), corner.embedding, y.coeffs);
    if (!coords) throw Error(ErrorCode::kOrbitNotClosed, "corner projection failed");
    const auto rc = sub.radical_coords(AlgebraElement{*coords});
    FieldElement acc{0};
    for (std::size_t k = 0; k < rc.size(); ++k) acc = alg.field().add(acc, alg.field().mul(form[k], rc[k]));
    out[l] = acc;
  }
  return out;
}

}  // namespace

TildeTriple make_triple(const Algebra& alg, const AlgebraElement& t, const AlgebraElement& a,
                        const AlgebraElement& b) {
  if (!is_zero_vector(alg.j_part(t).coeffs)) throw Error(ErrorCode::kNotInH, "t has a radical component");
  if (!is_identity_s_part(alg, a)) throw Error(ErrorCode::kNotInRadical, "a - 1 is not in J");
  if (!is_identity_s_part(alg, b)) throw Error(ErrorCode::kNotInRadical, "b - 1 is not in J");
  return TildeTriple{invert(alg, t), invert(alg, a), invert(alg, b)};
}

TildeTriple identity_triple(const Algebra& alg) {
  const GroupElement one{alg.one(), alg.one()};
  return {one, one, one};
}

TildeTriple triple_product(const Algebra& alg, const TildeTriple& x, const TildeTriple& y) {
  auto conj = [&](const GroupElement& u) {
    return alg.mul(alg.mul(y.t.inverse, u.element), y.t.element);
  };
  const auto t = alg.mul(x.t.element, y.t.element);
  const auto a = alg.mul(conj(x.a), y.a.element);
  const auto b = alg.mul(conj(x.b), y.b.element);
  return make_triple(alg, t, a, b);
}

TildeTriple triple_inverse(const Algebra& alg, const TildeTriple& x) {
  auto conj = [&](const AlgebraElement& u) { return alg.mul(alg.mul(x.t.element, u), x.t.inverse); };
  return make_triple(alg, x.t.inverse, conj(x.a.inverse), conj(x.b.inverse));
}

AlgebraElement rho(const Algebra& alg, const TildeTriple& tau, const AlgebraElement& x) {
  if (!alg.in_radical(x)) throw Error(ErrorCode::kNotInRadical, "rho expects an element of J");
  const auto l = alg.mul(tau.t.element, tau.a.element);
  const auto r = alg.mul(tau.b.inverse, tau.t.inverse);
  return alg.mul(alg.mul(l, x), r);
}

DualForm rho_dual(const Algebra& alg, const TildeTriple& tau, const DualForm& lambda) {
  const auto l = alg.mul(tau.a.inverse, tau.t.inverse);
  const auto r = alg.mul(tau.t.element, tau.b.element);
  DualForm out{Vector(alg.radical_dim())};
  for (std::uint32_t k = 0; k < alg.radical_dim(); ++k) {
    const auto img = alg.mul(alg.mul(l, alg.basis(alg.radical_indices()[k])), r);
    out.coeffs[k] = alg.evaluate(lambda, img);
  }
  return out;
}

AlgebraElement r_act(const Algebra& alg, const TildeTriple& tau, const AlgebraElement& g) {
  const auto l = alg.mul(tau.t.element, tau.a.element);
  const auto r = alg.mul(tau.b.inverse, tau.t.inverse);
  return alg.add(alg.one(), alg.mul(alg.mul(l, alg.sub(g, alg.one())), r));
}

void AffineMap::apply_into(const GaloisField& f, std::span<const FieldElement> x,
                           std::span<FieldElement> out) const {
  linear.apply_into(f, x, out);
  if (!offset.empty())
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(out[i], offset[i]);
}

std::string_view space_name(Space s) {
  switch (s) {
    case Space::kJ: return "J";
    case Space::kDual: return "J*";
    case Space::kGroup: return "G";
  }
  return "?";
}

AffineMap action_map(const Algebra& alg, const TildeTriple& tau, Space space) {
  switch (space) {
    case Space::kJ:
      return {sandwich_matrix(alg, alg.mul(tau.t.element, tau.a.element),
                              alg.mul(tau.b.inverse, tau.t.inverse), true),
              {}};
    case Space::kDual:
      // Coordinates of the contragredient action are the transpose of the
      // primal action of the inverse triple.
      return {sandwich_matrix(alg, alg.mul(tau.a.inverse, tau.t.inverse),
                              alg.mul(tau.t.element, tau.b.element), true)
                  .transpose(),
              {}};
    case Space::kGroup: {
      AffineMap m{sandwich_matrix(alg, alg.mul(tau.t.element, tau.a.element),
                                  alg.mul(tau.b.inverse, tau.t.inverse), false),
                  {}};
      const auto one = alg.one().coeffs;
      const auto image = m.linear.apply(alg.field(), one);
      m.offset.resize(one.size());
      for (std::size_t i = 0; i < one.size(); ++i) m.offset[i] = alg.field().sub(one[i], image[i]);
      return m;
    }
  }
  return {};
}

std::vector<TildeTriple> generating_triples(const Algebra& alg, std::uint64_t completion_bound) {
  const auto& f = alg.field();
  std::vector<TildeTriple> out;
  const auto one = alg.one();
  for (std::uint32_t i = 0; i < alg.block_count(); ++i) {
    AlgebraElement t = alg.block_generator(i);
    for (std::uint32_t j = 0; j < alg.block_count(); ++j)
      if (j != i) t = alg.add(t, alg.idempotent(Idempotent{1u << j}));
    out.push_back(make_triple(alg, t, one, one));
  }
  std::vector<AlgebraElement> unipotents;
  for (auto r : alg.radical_indices())
    for (std::uint32_t c = 1; c < f.size(); ++c)
      unipotents.push_back(alg.add(one, alg.scale(FieldElement{c}, alg.basis(r))));

  const VectorCodec codec(f.size(), alg.radical_dim());
  if (codec.space_size() != 0 && codec.space_size() <= completion_bound) {
    for (;;) {
      auto closure = subgroup_closure(alg, unipotents, codec);
      if (closure.size() == codec.space_size()) break;
      std::sort(closure.begin(), closure.end());
      std::uint64_t missing = 0;
      while (missing < closure.size() && closure[missing] == missing) ++missing;
      unipotents.push_back(alg.add(one, alg.from_radical(codec.decode(missing))));
    }
  }
  for (const auto& u : unipotents) {
    out.push_back(make_triple(alg, one, u, one));
    out.push_back(make_triple(alg, one, one, u));
  }
  return out;
}

std::vector<TildeTriple> random_triples(const Algebra& alg, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<TildeTriple> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto t = random_unit_of_h(alg, rng);
    const auto a = random_unipotent(alg, rng);
    const auto b = random_unipotent(alg, rng);
    out.push_back(make_triple(alg, t, a, b));
  }
  return out;
}

KeyIndex::KeyIndex(std::uint64_t space_size)
    : dense_(space_size != 0 && space_size <= (std::uint64_t{1} << 26)) {
  if (dense_) table_.assign(space_size, kAbsent);
}

std::uint32_t KeyIndex::get(std::uint64_t key) const {
  if (dense_) return table_[key];
  auto it = map_.find(key);
  return it == map_.end() ? kAbsent : it->second;
}

void KeyIndex::set(std::uint64_t key, std::uint32_t value) {
  if (dense_)
    table_[key] = value;
  else
    map_[key] = value;
}

OrbitFinder::OrbitFinder(FieldSpec field, std::uint32_t length, std::vector<AffineMap> generators,
                         std::vector<AffineMap> samples)
    : field_(std::move(field)),
      codec_(field_->size(), length),
      generators_(std::move(generators)),
      samples_(std::move(samples)) {}

std::vector<std::uint64_t> OrbitFinder::orbit(std::uint64_t start) const {
  std::unordered_set<std::uint64_t> seen{start};
  std::vector<std::uint64_t> members{start};
  Vector x(codec_.length()), y(codec_.length());
  for (std::size_t i = 0; i < members.size(); ++i) {
    codec_.decode(members[i], x);
    for (const auto& g : generators_) {
      g.apply_into(*field_, x, y);
      const auto key = codec_.encode(y);
      if (seen.insert(key).second) members.push_back(key);
    }
  }
  std::sort(members.begin(), members.end());
  for (const auto& s : samples_)
    for (auto m : members) {
      codec_.decode(m, x);
      s.apply_into(*field_, x, y);
      if (!std::binary_search(members.begin(), members.end(), codec_.encode(y)))
        throw Error(ErrorCode::kOrbitNotClosed,
                    "orbit of " + format_vector(codec_.decode(start)) + " is not closed under a sampled triple");
    }
  return members;
}

std::vector<std::vector<std::uint64_t>> OrbitFinder::partition(std::span<const std::uint64_t> seeds,
                                                               KeyIndex& orbit_of) const {
  std::vector<std::vector<std::uint64_t>> out;
  Vector x(codec_.length()), y(codec_.length());
  for (auto seed : seeds) {
    if (orbit_of.get(seed) != KeyIndex::kAbsent) continue;
    const auto id = static_cast<std::uint32_t>(out.size());
    std::vector<std::uint64_t> members{seed};
    orbit_of.set(seed, id);
    for (std::size_t i = 0; i < members.size(); ++i) {
      codec_.decode(members[i], x);
      for (const auto& g : generators_) {
        g.apply_into(*field_, x, y);
        const auto key = codec_.encode(y);
        if (orbit_of.get(key) == KeyIndex::kAbsent) {
          orbit_of.set(key, id);
          members.push_back(key);
        }
      }
    }
    std::sort(members.begin(), members.end());
    verify(members, orbit_of, id);
    out.push_back(std::move(members));
  }
  return out;
}

void OrbitFinder::verify(std::span<const std::uint64_t> members, const KeyIndex& orbit_of,
                         std::uint32_t id) const {
  Vector x(codec_.length()), y(codec_.length());
  for (const auto& s : samples_)
    for (auto m : members) {
      codec_.decode(m, x);
      s.apply_into(*field_, x, y);
      if (orbit_of.get(codec_.encode(y)) != id)
        throw Error(ErrorCode::kOrbitNotClosed,
                    "orbit of " + format_vector(codec_.decode(members.front())) +
                        " is not closed under a sampled triple");
    }
}

namespace {

OrbitFinder make_finder(const Algebra& alg, Space space) {
  std::vector<AffineMap> gens, samples;
  for (const auto& t : generating_triples(alg)) gens.push_back(action_map(alg, t, space));
  for (const auto& t : random_triples(alg, kClosureSamples, kClosureSeed))
    samples.push_back(action_map(alg, t, space));
  const auto length = space == Space::kGroup ? alg.dim() : alg.radical_dim();
  return OrbitFinder(alg.field_ptr(), length, std::move(gens), std::move(samples));
}

}  // namespace

OrbitRecord orbit(const Algebra& alg, const Vector& start, Space space) {
  const auto finder = make_finder(alg, space);
  OrbitRecord rec{space, finder.orbit(finder.codec().encode(start)), {}};
  rec.representative = finder.codec().decode(rec.members.front());
  return rec;
}

Idempotent peirce_support(const Algebra& alg, const Vector& v, Space space) {
  Idempotent out;
  for (std::uint32_t i = 0; i < alg.block_count(); ++i) {
    const auto e = alg.idempotent(Idempotent{1u << i});
    bool hit = false;
    if (space == Space::kDual) {
      const DualForm form{v};
      for (std::uint32_t l = 0; l < alg.radical_dim() && !hit; ++l) {
        const auto b = alg.basis(alg.radical_indices()[l]);
        hit = alg.evaluate(form, alg.mul(e, b)).value != 0 || alg.evaluate(form, alg.mul(b, e)).value != 0;
      }
    } else {
      const auto x = space == Space::kJ ? alg.from_radical(v) : AlgebraElement{v};
      hit = !is_zero_vector(alg.mul(e, x).coeffs) || !is_zero_vector(alg.mul(x, e).coeffs);
    }
    if (hit) out.mask |= 1u << i;
  }
  return out;
}

bool is_singular(const Algebra& alg, const Vector& v, Space space, std::optional<Idempotent> within) {
  const auto& f = alg.field();
  std::vector<Vector> domain;
  if (within) {
    const auto e = alg.idempotent(*within);
    std::vector<Vector> span;
    for (std::uint32_t i = 0; i < alg.dim(); ++i) span.push_back(alg.mul(alg.mul(e, alg.basis(i)), e).coeffs);
    domain = row_space_basis(f, span);
  } else {
    for (std::uint32_t i = 0; i < alg.dim(); ++i) domain.push_back(alg.basis(i).coeffs);
  }
  if (domain.empty()) return false;

  const std::uint32_t r = alg.radical_dim();
  const std::size_t rows = space == Space::kDual ? 2 * r : 2 * alg.dim();
  Matrix m(rows, domain.size());
  for (std::size_t c = 0; c < domain.size(); ++c) {
    const AlgebraElement cv{domain[c]};
    if (space == Space::kDual) {
      const DualForm form{v};
      for (std::uint32_t l = 0; l < r; ++l) {
        const auto b = alg.basis(alg.radical_indices()[l]);
        m(l, c) = alg.evaluate(form, alg.mul(b, cv));
        m(r + l, c) = alg.evaluate(form, alg.mul(cv, b));
      }
    } else {
      const auto x = space == Space::kJ ? alg.from_radical(v) : AlgebraElement{v};
      const auto left = alg.mul(cv, x);
      const auto right = alg.mul(x, cv);
      for (std::uint32_t k = 0; k < alg.dim(); ++k) {
        m(k, c) = left.coeffs[k];
        m(alg.dim() + k, c) = right.coeffs[k];
      }
    }
  }
  for (const auto& k : kernel(f, m)) {
    AlgebraElement c = alg.zero();
    for (std::size_t a = 0; a < domain.size(); ++a)
      if (k[a].value != 0) c = alg.add(c, alg.scale(k[a], AlgebraElement{domain[a]}));
    if (!is_zero_vector(alg.s_part(c).coeffs)) return true;
  }
  return false;
}

SupportInfo support_idempotent(const Algebra& alg, const OrbitRecord& orb) {
  const VectorCodec codec(alg.field().size(), static_cast<std::uint32_t>(orb.representative.size()));
  std::vector<std::pair<std::uint32_t, std::uint64_t>> supports;
  std::uint32_t meet = alg.full_idempotent().mask;
  for (auto key : orb.members) {
    const auto s = peirce_support(alg, codec.decode(key), orb.space).mask;
    supports.emplace_back(s, key);
    meet &= s;
  }
  // Members are sorted, so the first hit is the least member in J_e.
  for (const auto& [s, key] : supports)
    if (s == meet) return {Idempotent{meet}, codec.decode(key)};
  throw Error(ErrorCode::kOrbitNotClosed,
              "idempotents meeting the orbit of " + format_vector(orb.representative) +
                  " have no least element");
}

OrbitCensus orbit_census(const Algebra& alg, Space space, std::uint64_t bound) {
  if (space == Space::kGroup) throw std::invalid_argument("orbit_census covers J and J* only");
  const VectorCodec codec(alg.field().size(), alg.radical_dim());
  if (codec.space_size() == 0 || codec.space_size() > bound)
    throw Error(ErrorCode::kSpaceTooLarge, "q^dim J exceeds the enumeration bound of " + std::to_string(bound));
  const auto finder = make_finder(alg, space);
  std::vector<std::uint64_t> seeds(codec.space_size());
  std::iota(seeds.begin(), seeds.end(), std::uint64_t{0});
  KeyIndex index(codec.space_size());
  const auto orbits = finder.partition(seeds, index);

  OrbitCensus census;
  census.space = space;
  census.orbit_of.resize(codec.space_size());
  for (std::uint64_t k = 0; k < codec.space_size(); ++k) census.orbit_of[k] = index.get(k);
  const std::uint32_t blocks = alg.block_count();
  const std::uint32_t subsets = 1u << blocks;
  census.n_exact.assign(subsets, 0);
  census.n_within.assign(subsets, 0);
  for (const auto& members : orbits) {
    OrbitInfo info;
    info.record = OrbitRecord{space, members, codec.decode(members.front())};
    const auto sup = support_idempotent(alg, info.record);
    info.support = sup.e;
    info.support_rep = sup.representative;
    info.singular = is_singular(alg, info.record.representative, space);
    ++census.n_exact[info.support.mask];
    census.orbits.push_back(std::move(info));
  }
  census.n = census.orbits.size();
  const std::uint32_t full = alg.full_idempotent().mask;
  census.n_regular = census.n_exact[full];
  for (std::uint32_t f = 0; f < subsets; ++f)
    for (std::uint32_t e = 0; e < subsets; ++e)
      if ((e & f) == e) census.n_within[f] += census.n_exact[e];
  std::int64_t alternating = 0;
  for (std::uint32_t t = 0; t < subsets; ++t) {
    const auto ft = full & ~t;
    const auto term = static_cast<std::int64_t>(census.n_within[ft]);
    alternating += (std::popcount(t) % 2 == 0) ? term : -term;
  }
  census.residual = static_cast<std::int64_t>(census.n_regular) - alternating;
  return census;
}

std::optional<CornerAlgebra> corner_algebra(const Algebra& alg, Idempotent e) {
  if (e.mask == 0) return std::nullopt;
  const auto& f = alg.field();
  const auto ee = alg.idempotent(e);
  AlgebraSpec spec;
  spec.field = alg.field_ptr();
  std::vector<Vector> basis;
  CornerAlgebra corner;
  for (std::uint32_t i = 0; i < alg.block_count(); ++i) {
    if (!e.has_block(i)) continue;
    corner.blocks.push_back(i);
    BlockSpec blk;
    blk.degree = alg.spec().blocks[i].degree;
    for (auto idx : alg.spec().blocks[i].basis) {
      blk.basis.push_back(static_cast<std::uint32_t>(basis.size()));
      basis.push_back(alg.basis(idx).coeffs);
    }
    spec.blocks.push_back(std::move(blk));
  }
  std::vector<Vector> radical_span;
  for (auto r : alg.radical_indices()) radical_span.push_back(alg.mul(alg.mul(ee, alg.basis(r)), ee).coeffs);
  for (auto& v : row_space_basis(f, radical_span)) {
    spec.radical_basis.push_back(static_cast<std::uint32_t>(basis.size()));
    basis.push_back(std::move(v));
  }
  const auto d = static_cast<std::uint32_t>(basis.size());
  spec.dim = d;
  corner.embedding = Matrix(alg.dim(), d);
  for (std::uint32_t c = 0; c < d; ++c)
    for (std::uint32_t r = 0; r < alg.dim(); ++r) corner.embedding(r, c) = basis[c][r];
  auto coords = [&](const AlgebraElement& x) {
    auto y = solve(f, corner.embedding, x.coeffs);
    if (!y) throw Error(ErrorCode::kNotDirectSum, "corner is not closed under multiplication");
    return *y;
  };
  for (std::uint32_t a = 0; a < d; ++a)
    for (std::uint32_t b = 0; b < d; ++b) {
      const auto y = coords(alg.mul(AlgebraElement{basis[a]}, AlgebraElement{basis[b]}));
      StructureEntry entry{a, b, {}};
      for (std::uint32_t k = 0; k < d; ++k)
        if (y[k].value != 0) entry.terms.push_back({k, y[k]});
      if (!entry.terms.empty()) spec.mul.push_back(std::move(entry));
    }
  spec.unit = coords(ee);
  for (std::size_t k = 0; k < corner.blocks.size(); ++k)
    spec.blocks[k].idempotent = coords(alg.idempotent(Idempotent{1u << corner.blocks[k]}));
  corner.algebra = std::make_shared<const Algebra>(validate_algebra(std::move(spec)));
  return corner;
}

std::vector<std::string> verify_corner_counts(const Algebra& alg, const OrbitCensus& census, std::uint64_t bound) {
  std::vector<std::string> problems;
  const std::uint32_t subsets = 1u << alg.block_count();
  const VectorCodec codec(alg.field().size(), alg.radical_dim());
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    const auto corner = corner_algebra(alg, Idempotent{mask});
    const std::string where = "f=" + std::to_string(mask) + " in " + std::string(space_name(census.space));
    if (!corner) {
      if (census.n_within[0] != 1) problems.push_back(where + ": zero corner should meet only the zero orbit");
      continue;
    }
    const auto& sub = *corner->algebra;
    const auto local = orbit_census(sub, census.space, bound);
    if (local.n != census.n_within[mask]) {
      problems.push_back(where + ": corner has " + std::to_string(local.n) + " orbits, census counts " +
                         std::to_string(census.n_within[mask]));
      continue;
    }
    std::vector<bool> hit(census.orbits.size(), false);
    for (const auto& o : local.orbits) {
      Vector big;
      if (census.space == Space::kJ) {
        const auto x = corner->embedding.apply(alg.field(), sub.from_radical(o.record.representative).coeffs);
        big = alg.radical_coords(AlgebraElement{x});
      } else {
        big = embed_form(alg, *corner, o.record.representative);
      }
      const auto id = census.orbit_of[codec.encode(big)];
      if (hit[id] || !Idempotent{mask}.contains(census.orbits[id].support)) {
        problems.push_back(where + ": corner orbit of " + format_vector(o.record.representative) +
                           " does not match a distinct orbit of the full algebra");
        break;
      }
      hit[id] = true;
    }
  }
  return problems;
}

}  // namespace supchar
