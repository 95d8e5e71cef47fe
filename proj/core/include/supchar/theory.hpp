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

#ifndef SUPCHAR_THEORY_HPP_
#define SUPCHAR_THEORY_HPP_

#include <memory>
#include <vector>

#include "supchar/action.hpp"
#include "supchar/character_table.hpp"
#include "supchar/group.hpp"
#include "supchar/superclass.hpp"
#include "supchar/supercharacter.hpp"

namespace supchar {

struct TheoryOptions {
  std::uint64_t group_bound = kDefaultGroupBound;
  std::uint64_t space_bound = kDefaultSpaceBound;
  unsigned jobs = 1;
  bool conjugacy_check = true;
};

// The whole brute-force pipeline for one algebra: orbit censuses, superclass
// partition, supercharacter labels and their induced characters.
class Theory {
 public:
  static std::unique_ptr<Theory> build(std::shared_ptr<const Algebra> alg, const TheoryOptions& options = {});

  Theory(const Theory&) = delete;
  Theory& operator=(const Theory&) = delete;

  const Algebra& algebra() const { return *alg_; }
  const std::shared_ptr<const Algebra>& algebra_ptr() const { return alg_; }
  const FiniteGroup& group() const { return group_; }
  const OrbitCensus& j_census() const { return j_census_; }
  const OrbitCensus& dual_census() const { return dual_census_; }
  const std::vector<SuperclassRecord>& superclasses() const { return superclasses_; }
  const std::vector<SupercharLabel>& labels() const { return labels_; }
  const std::vector<ClassFunction>& characters() const { return characters_; }
  const Inducer& inducer() const { return inducer_; }
  const TableEvidence& evidence() const { return evidence_; }

  // Rows and columns in label order, labels in the generic string form.
  CharacterTable table() const;

 private:
  Theory(std::shared_ptr<const Algebra> alg, const TheoryOptions& options);

  std::shared_ptr<const Algebra> alg_;
  FiniteGroup group_;
  OrbitCensus j_census_;
  OrbitCensus dual_census_;
  std::vector<SuperclassRecord> superclasses_;
  Inducer inducer_;
  std::vector<SupercharLabel> labels_;
  std::vector<ClassFunction> characters_;
  TableEvidence evidence_;
};

}  // namespace supchar

#endif  // SUPCHAR_THEORY_HPP_
