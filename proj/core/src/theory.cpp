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

#include "supchar/theory.hpp"

namespace supchar {

std::unique_ptr<Theory> Theory::build(std::shared_ptr<const Algebra> alg, const TheoryOptions& options) {
  return std::unique_ptr<Theory>(new Theory(std::move(alg), options));
}

Theory::Theory(std::shared_ptr<const Algebra> alg, const TheoryOptions& options)
    : alg_(std::move(alg)),
      group_(FiniteGroup::units(*alg_, options.group_bound)),
      j_census_(orbit_census(*alg_, Space::kJ, options.space_bound)),
      dual_census_(orbit_census(*alg_, Space::kDual, options.space_bound)),
      superclasses_(superclass_partition(*alg_, group_, j_census_)),
      inducer_(*alg_, group_, superclasses_),
      labels_(superchar_labels(*alg_, dual_census_)),
      characters_(inducer_.induce_all(labels_, options.jobs)) {
  evidence_.constancy_checked = true;
  evidence_.elements_checked = group_.size();
  if (options.conjugacy_check) {
    const auto classes = group_.conjugacy_classes();
    evidence_.conjugacy_checked = true;
    evidence_.conjugacy_class_count = classes.size();
    evidence_.conjugacy_refines = true;
    const auto& class_of = inducer_.class_of();
    for (const auto& c : classes)
      for (auto g : c) evidence_.conjugacy_refines = evidence_.conjugacy_refines && class_of[g] == class_of[c.front()];
  }
}

CharacterTable Theory::table() const {
  CharacterTable t;
  t.order = alg_->cyclotomic_order();
  t.group_order = group_.size();
  t.identity_col = inducer_.identity_class();
  for (const auto& rec : superclasses_) {
    t.col_labels.push_back(label_string(*alg_, rec.label));
    t.sizes.push_back(rec.size);
  }
  for (std::size_t r = 0; r < labels_.size(); ++r) {
    t.row_labels.push_back(label_string(*alg_, labels_[r]));
    t.values.push_back(characters_[r].values);
  }
  return t;
}

}  // namespace supchar
