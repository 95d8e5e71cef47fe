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

#ifndef SUPCHAR_ACTION_HPP_
#define SUPCHAR_ACTION_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <unordered_map>
#include <vector>

#include "supchar/algebra.hpp"

namespace supchar {

// (t, a, b) with t in H and a, b in N = 1 + J. Product:
// (t1 t2, t2^-1 a1 t2 a2, t2^-1 b1 t2 b2).
struct TildeTriple {
  GroupElement t;
  GroupElement a;
  GroupElement b;
};

// Checks membership (NotInH / NotInRadical) and inverts the components.
TildeTriple make_triple(const Algebra& alg, const AlgebraElement& t, const AlgebraElement& a,
                        const AlgebraElement& b);
TildeTriple identity_triple(const Algebra& alg);
TildeTriple triple_product(const Algebra& alg, const TildeTriple& x, const TildeTriple& y);
TildeTriple triple_inverse(const Algebra& alg, const TildeTriple& x);

// x -> t a x b^-1 t^-1 for x in J; NotInRadical otherwise.
AlgebraElement rho(const Algebra& alg, const TildeTriple& tau, const AlgebraElement& x);
// The contragredient form x -> lambda(a^-1 t^-1 x t b).
DualForm rho_dual(const Algebra& alg, const TildeTriple& tau, const DualForm& lambda);
// g -> 1 + t a (g - 1) b^-1 t^-1.
AlgebraElement r_act(const Algebra& alg, const TildeTriple& tau, const AlgebraElement& g);

// x -> linear x + offset on coordinate vectors. An empty offset means zero.
struct AffineMap {
  Matrix linear;
  Vector offset;

  void apply_into(const GaloisField& f, std::span<const FieldElement> x, std::span<FieldElement> out) const;
};

enum class Space { kJ, kDual, kGroup };
std::string_view space_name(Space s);

// rho, rho_dual on radical coordinates and r_act on full coordinates.
AffineMap action_map(const Algebra& alg, const TildeTriple& tau, Space space);

// {(t_i,1,1)} for the block generators, {(1,1+c b,1)} and {(1,1,1+c b)} for
// every radical basis vector b and c != 0. When q^dim J <= `completion_bound`
// the N-part is checked to generate all of N and padded if it does not.
std::vector<TildeTriple> generating_triples(const Algebra& alg,
                                            std::uint64_t completion_bound = std::uint64_t{1} << 20);
// Uniformly random triples from a fixed-seed generator.
std::vector<TildeTriple> random_triples(const Algebra& alg, std::size_t count, std::uint64_t seed);

inline constexpr std::size_t kClosureSamples = 100;
inline constexpr std::uint64_t kClosureSeed = 0x5eed2026;

// Integer keys of coordinate vectors, dense when the space is small.
class KeyIndex {
 public:
  static constexpr std::uint32_t kAbsent = 0xffffffffu;

  explicit KeyIndex(std::uint64_t space_size);
  std::uint32_t get(std::uint64_t key) const;
  void set(std::uint64_t key, std::uint32_t value);

 private:
  bool dense_;
  std::vector<std::uint32_t> table_;
  std::unordered_map<std::uint64_t, std::uint32_t> map_;
};

struct OrbitRecord {
  Space space = Space::kJ;
  std::vector<std::uint64_t> members;  // sorted keys; the codec order is lex order
  Vector representative;               // lexicographically minimal member
};

// Breadth-first orbits of a group given by generators, with a closure check
// against sample maps. Throws OrbitNotClosed if a sample leaves an orbit.
class OrbitFinder {
 public:
  OrbitFinder(FieldSpec field, std::uint32_t length, std::vector<AffineMap> generators,
              std::vector<AffineMap> samples);

  const VectorCodec& codec() const { return codec_; }

  // Orbit of one key, sorted.
  std::vector<std::uint64_t> orbit(std::uint64_t start) const;

  // Partitions `seeds` (ascending) into orbits. Orbits are listed in order of
  // their least member. `orbit_of` receives the orbit index of every member.
  std::vector<std::vector<std::uint64_t>> partition(std::span<const std::uint64_t> seeds,
                                                    KeyIndex& orbit_of) const;

 private:
  void verify(std::span<const std::uint64_t> members, const KeyIndex& orbit_of, std::uint32_t id) const;

  FieldSpec field_;
  VectorCodec codec_;
  std::vector<AffineMap> generators_;
  std::vector<AffineMap> samples_;
};

// Orbit of x in J or of a form in J* under the full triple group.
OrbitRecord orbit(const Algebra& alg, const Vector& start, Space space);

// Least idempotent e with v in J_e (v in J) or v in J_e* (v a form).
Idempotent peirce_support(const Algebra& alg, const Vector& v, Space space);

// Annihilator test: true iff some c outside J (inside A_e when
// `within` is set) kills v on both sides. The zero vector of a nonzero
// corner is singular; everything in the zero algebra is regular.
bool is_singular(const Algebra& alg, const Vector& v, Space space,
                 std::optional<Idempotent> within = std::nullopt);

struct SupportInfo {
  Idempotent e;
  Vector representative;  // least member inside J_e (or J_e*)
};
// Minimum over the orbit's Peirce supports; checks that the set of idempotents
// meeting the orbit is closed under products.
SupportInfo support_idempotent(const Algebra& alg, const OrbitRecord& orb);

struct OrbitInfo {
  OrbitRecord record;
  Idempotent support;
  Vector support_rep;
  bool singular = false;
};

struct OrbitCensus {
  Space space = Space::kJ;
  std::vector<OrbitInfo> orbits;
  std::vector<std::uint32_t> orbit_of;    // indexed by key
  std::uint64_t n = 0;                    // number of orbits
  std::uint64_t n_regular = 0;            // orbits with support 1
  std::vector<std::uint64_t> n_within;    // n(J_f), indexed by idempotent mask
  std::vector<std::uint64_t> n_exact;     // n_E(J_e), indexed by idempotent mask
  std::int64_t residual = 0;              // n_E - sum_T (-1)^|T| n(J_{f_T})
};

inline constexpr std::uint64_t kDefaultSpaceBound = std::uint64_t{1} << 20;

// Full orbit census of J or J*. SpaceTooLarge above `bound` vectors.
OrbitCensus orbit_census(const Algebra& alg, Space space, std::uint64_t bound = kDefaultSpaceBound);

// eAe as a standalone algebra together with the embedding of its coordinates.
struct CornerAlgebra {
  std::shared_ptr<const Algebra> algebra;
  Matrix embedding;  // dim A x dim A_e, columns are the new basis in old coordinates
  std::vector<std::uint32_t> blocks;  // old block index of each new block
};
// Nullopt for e = 0.
std::optional<CornerAlgebra> corner_algebra(const Algebra& alg, Idempotent e);

// Recounts orbits of the corner triple group on J_f for every f and compares
// with the census. Returns one message per disagreement.
std::vector<std::string> verify_corner_counts(const Algebra& alg, const OrbitCensus& census,
                                              std::uint64_t bound = kDefaultSpaceBound);

}  // namespace supchar

#endif  // SUPCHAR_ACTION_HPP_
