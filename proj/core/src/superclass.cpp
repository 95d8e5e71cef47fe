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

#include "supchar/superclass.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "supchar/error.hpp"

namespace supchar {
namespace {

std::vector<std::uint32_t> blocks_of(Idempotent e) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < 32; ++i)
    if (e.has_block(i)) out.push_back(i + 1);
  return out;
}

std::string block_set(Idempotent e) {
  std::string s = "{";
  bool first = true;
  for (auto b : blocks_of(e)) {
    s += (first ? "" : ",") + std::to_string(b);
    first = false;
  }
  return s + "}";
}

// Block components of h: one packed value per block.
std::vector<std::uint64_t> block_values(const Algebra& alg, const AlgebraElement& h) {
  std::vector<std::uint64_t> out;
  for (std::uint32_t i = 0; i < alg.block_count(); ++i) {
    const auto comp = alg.block_component(h, i);
    out.push_back(VectorCodec(alg.field().size(), static_cast<std::uint32_t>(comp.size())).encode(comp));
  }
  return out;
}

}  // namespace

Idempotent associated_idempotent(const Algebra& alg, const AlgebraElement& h) {
  if (!is_zero_vector(alg.j_part(h).coeffs)) throw Error(ErrorCode::kNotInH, "h has a radical component");
  Idempotent f;
  for (std::uint32_t i = 0; i < alg.block_count(); ++i) {
    if (is_zero_vector(alg.block_component(h, i)))
      throw Error(ErrorCode::kNotInH, "h vanishes on block " + std::to_string(i + 1));
    if (alg.block_component(h, i) != alg.block_component(alg.one(), i)) f.mask |= 1u << i;
  }
  return f;
}

SuperclassLabel classify(const Algebra& alg, const OrbitCensus& census, const AlgebraElement& g) {
  const auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::kReductionFailed, why + " for g = " + format_vector(g.coeffs));
  };
  const auto h = alg.s_part(g);
  const auto x = alg.j_part(g);
  const Idempotent f = associated_idempotent(alg, h);
  const auto fe = alg.idempotent(f);
  const auto fprime = alg.sub(alg.one(), fe);
  // h - 1 = u f with u = (h - 1) + (1 - f) a unit of S.
  const auto s = alg.sub(h, alg.one());
  const auto u = alg.add(s, fprime);
  const auto uinv = invert(alg, u).inverse;
  const auto xt = alg.mul(uinv, x);
  // a (f + x~) b = f + y with a = (1 + x~)^-1, f + u1 = a (f + x~), b = 1 - f u1.
  const auto a = invert(alg, alg.add(alg.one(), xt)).inverse;
  const auto u1 = alg.sub(alg.mul(a, alg.add(fe, xt)), fe);
  const auto b = alg.sub(alg.one(), alg.mul(fe, u1));
  const auto reduced = alg.mul(alg.mul(a, alg.add(fe, xt)), b);
  const auto y = alg.mul(fprime, u1);
  if (alg.add(fe, y).coeffs != reduced.coeffs) fail("a (f + x) b differs from f + y");
  if (!alg.in_radical(y) || !is_zero_vector(alg.mul(fe, y).coeffs) || !is_zero_vector(alg.mul(y, fe).coeffs))
    fail("reduced radical part is not in J_{1-f}");
  const auto yprime = alg.mul(u, y);

  const VectorCodec codec(alg.field().size(), alg.radical_dim());
  const auto& info = census.orbits[census.orbit_of[codec.encode(alg.radical_coords(yprime))]];
  if (!info.support.orthogonal(f)) fail("orbit support meets f");
  SuperclassLabel label{info.support, f, h, alg.from_radical(info.support_rep)};
  return label;
}

std::vector<SuperclassRecord> superclass_partition(const Algebra& alg, const FiniteGroup& group,
                                                   const OrbitCensus& census) {
  if (census.space != Space::kJ) throw std::invalid_argument("superclass labels need the J census");
  std::vector<AffineMap> gens, samples;
  for (const auto& t : generating_triples(alg)) gens.push_back(action_map(alg, t, Space::kGroup));
  for (const auto& t : random_triples(alg, kClosureSamples, kClosureSeed))
    samples.push_back(action_map(alg, t, Space::kGroup));
  const OrbitFinder finder(alg.field_ptr(), alg.dim(), std::move(gens), std::move(samples));
  std::vector<std::uint64_t> seeds(group.size());
  for (std::uint32_t i = 0; i < group.size(); ++i) seeds[i] = group.key(i);
  KeyIndex orbit_of(group.codec().space_size());
  const auto orbits = finder.partition(seeds, orbit_of);

  std::vector<SuperclassRecord> out;
  for (std::uint32_t id = 0; id < orbits.size(); ++id) {
    const auto& members = orbits[id];
    for (auto k : members)
      if (group.index_of_key(k) == KeyIndex::kAbsent)
        throw Error(ErrorCode::kOrbitNotClosed, "superclass leaves the group");
    SuperclassRecord rec;
    rec.members = members;
    rec.size = members.size();
    rec.representative = group.codec().decode(members.front());
    rec.label = classify(alg, census, AlgebraElement{rec.representative});
    const auto witness = alg.add(rec.label.h, rec.label.omega_rep);
    if (orbit_of.get(group.codec().encode(witness.coeffs)) != id)
      throw Error(ErrorCode::kReductionFailed,
                  "h + omega_rep = " + format_vector(witness.coeffs) + " lies outside its superclass");
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.label < y.label; });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].label == out[i - 1].label)
      throw Error(ErrorCode::kLabelCollision, "two superclasses share the label " + label_string(alg, out[i].label));
  return out;
}

std::vector<std::uint64_t> superclass_of(const Algebra& alg, const AlgebraElement& g) {
  std::vector<AffineMap> gens, samples;
  for (const auto& t : generating_triples(alg)) gens.push_back(action_map(alg, t, Space::kGroup));
  for (const auto& t : random_triples(alg, kClosureSamples, kClosureSeed))
    samples.push_back(action_map(alg, t, Space::kGroup));
  const OrbitFinder finder(alg.field_ptr(), alg.dim(), std::move(gens), std::move(samples));
  return finder.orbit(finder.codec().encode(g.coeffs));
}

std::uint64_t characters_per_idempotent(const Algebra& alg, Idempotent f) {
  std::uint64_t m = 1;
  for (std::uint32_t i = 0; i < alg.block_count(); ++i)
    if (f.has_block(i)) m *= alg.block_unit_count(i) - 1;
  return m;
}

std::uint64_t predicted_count(const Algebra& alg, const OrbitCensus& census) {
  std::uint64_t total = 0;
  const std::uint32_t subsets = 1u << alg.block_count();
  for (std::uint32_t e = 0; e < subsets; ++e)
    for (std::uint32_t f = 0; f < subsets; ++f)
      if ((e & f) == 0) total += census.n_exact[e] * characters_per_idempotent(alg, Idempotent{f});
  return total;
}

std::string label_string(const Algebra& alg, const SuperclassLabel& label) {
  std::ostringstream os;
  os << "e=" << block_set(label.e) << ";f=" << block_set(label.f) << ";h=[";
  const auto hv = block_values(alg, label.h);
  for (std::size_t i = 0; i < hv.size(); ++i) os << (i ? "," : "") << hv[i];
  os << "];w=" << format_vector(alg.radical_coords(label.omega_rep));
  return os.str();
}

std::string superclasses_json(const Algebra& alg, const std::vector<SuperclassRecord>& records) {
  nlohmann::json out = nlohmann::json::array();
  auto values = [](std::span<const FieldElement> v) {
    std::vector<std::uint32_t> r;
    for (auto x : v) r.push_back(x.value);
    return r;
  };
  for (const auto& rec : records) {
    nlohmann::json label = {{"e", blocks_of(rec.label.e)},
                            {"f", blocks_of(rec.label.f)},
                            {"h", block_values(alg, rec.label.h)},
                            {"omega_rep", values(rec.label.omega_rep.coeffs)}};
    out.push_back({{"label", label}, {"size", rec.size}, {"representative", values(rec.representative)}});
  }
  return out.dump(2) + "\n";
}

}  // namespace supchar
