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

#ifndef SUPCHAR_SUPERCLASS_HPP_
#define SUPCHAR_SUPERCLASS_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "supchar/action.hpp"
#include "supchar/group.hpp"

namespace supchar {

// (e, f, h, omega): e and f orthogonal, h - 1 supported on f, omega_rep the
// least element of the regular orbit in J_e (full coordinates).
struct SuperclassLabel {
  Idempotent e;
  Idempotent f;
  AlgebraElement h;
  AlgebraElement omega_rep;

  friend auto operator<=>(const SuperclassLabel&, const SuperclassLabel&) = default;
};

struct SuperclassRecord {
  SuperclassLabel label;
  std::vector<std::uint64_t> members;  // sorted full-coordinate keys
  std::uint64_t size = 0;
  Vector representative;               // least member
};

// Blocks on which h - 1 is nonzero. NotInH unless h is a unit of S.
Idempotent associated_idempotent(const Algebra& alg, const AlgebraElement& h);

// Orbits of the triple group on G, one record per superclass, labeled and
// sorted by label (so the identity comes first). `census` must be the J census.
std::vector<SuperclassRecord> superclass_partition(const Algebra& alg, const FiniteGroup& group,
                                                   const OrbitCensus& census);

// Label of the superclass through g, via the constructive reduction
// g ~ h + y with y in J_{1-f}. Throws ReductionFailed if a step misfires.
SuperclassLabel classify(const Algebra& alg, const OrbitCensus& census, const AlgebraElement& g);

// Superclass of a single element, found by BFS without enumerating G.
std::vector<std::uint64_t> superclass_of(const Algebra& alg, const AlgebraElement& g);

// |H_i| - 1 multiplied over the blocks of f.
std::uint64_t characters_per_idempotent(const Algebra& alg, Idempotent f);

// Sum over orthogonal (e, f) of n_E(J_e) m(f).
std::uint64_t predicted_count(const Algebra& alg, const OrbitCensus& census);

// "e={1};f={2};h=[1,2];w=[0,0,1]" with 1-based block numbers.
std::string label_string(const Algebra& alg, const SuperclassLabel& label);
std::string superclasses_json(const Algebra& alg, const std::vector<SuperclassRecord>& records);

}  // namespace supchar

#endif  // SUPCHAR_SUPERCLASS_HPP_
