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

#ifndef SUPCHAR_SUPERCHARACTER_HPP_
#define SUPCHAR_SUPERCHARACTER_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "supchar/action.hpp"
#include "supchar/cyclotomic.hpp"
#include "supchar/group.hpp"
#include "supchar/superclass.hpp"

namespace supchar {

// (e, f, theta, omega*): theta holds one exponent per block (mod |H_i|),
// nonzero exactly on the blocks of f; lambda_rep is the least form of the
// regular orbit in J_e*.
struct SupercharLabel {
  Idempotent e;
  Idempotent f;
  std::vector<std::uint64_t> theta;
  DualForm lambda_rep;

  friend auto operator<=>(const SupercharLabel&, const SupercharLabel&) = default;
};

// "e={1,2};f={};c=[0,0];l=[1,0,0]" with 1-based block numbers.
std::string label_string(const Algebra& alg, const SupercharLabel& label);

// All labels, sorted, from the census of J*.
std::vector<SupercharLabel> superchar_labels(const Algebra& alg, const OrbitCensus& dual_census);

struct StabilizerData {
  std::vector<Vector> j_right_basis;   // radical coordinates
  std::vector<std::uint32_t> n_right;  // group indices, sorted
  std::vector<std::uint32_t> h_eprime;
  std::vector<std::uint32_t> g_lambda;
  bool stabilizer_splits = false;     // H_{e'} = H_right(lambda) meet H_left(lambda)
};

// NotRegular unless lambda is a regular form of J_e*.
StabilizerData stabilizer_data(const Algebra& alg, const FiniteGroup& group, const DualForm& lambda, Idempotent e);

// theta(h) eps^{lambda(x)} for g = h + x in G_lambda; NotInStabilizer otherwise.
CycloNumber xi(const Algebra& alg, const SupercharLabel& label, const AlgebraElement& g);

// theta(h) over all blocks, at the algebra's cyclotomic order.
CycloNumber theta_value(const Algebra& alg, std::span<const std::uint64_t> theta, const AlgebraElement& h);

// Values on the superclasses of a fixed partition, in partition order.
struct ClassFunction {
  std::vector<CycloNumber> values;
};

// Induction from G_lambda to G by the averaging formula, evaluated on every
// group element and then checked to be constant on each superclass.
class Inducer {
 public:
  Inducer(const Algebra& alg, const FiniteGroup& group, std::span<const SuperclassRecord> classes);

  ClassFunction induce(const SupercharLabel& label) const;
  // Labels sharing a form reuse one sum; `jobs` workers split the forms.
  std::vector<ClassFunction> induce_all(std::span<const SupercharLabel> labels, unsigned jobs = 1) const;

  const std::vector<std::uint64_t>& sizes() const { return sizes_; }
  std::uint32_t identity_class() const { return identity_class_; }
  const std::vector<std::uint32_t>& class_of() const { return class_of_; }

 private:
  std::vector<ClassFunction> induce_form(const DualForm& lambda, Idempotent e,
                                         std::span<const SupercharLabel* const> labels) const;

  const Algebra* alg_;
  const FiniteGroup* group_;
  std::vector<std::uint64_t> sizes_;
  std::vector<std::uint32_t> class_of_;  // group index -> superclass index
  std::vector<std::uint32_t> class_rep_;
  std::uint32_t identity_class_ = 0;
};

// (1/|G|) sum over superclasses of size * phi * conj(psi). PartitionMismatch
// if the functions do not match `sizes`.
CycloNumber inner_product(std::span<const std::uint64_t> sizes, std::uint64_t group_order,
                          const ClassFunction& phi, const ClassFunction& psi);

// Supercharacter of N = 1 + J induced from xi_mu on N_{mu,right}; one value
// per element of `n_group`, at the algebra's cyclotomic order.
std::vector<CycloNumber> n_supercharacter(const Algebra& alg, const FiniteGroup& n_group, const DualForm& mu);

struct RestrictionReport {
  std::vector<std::pair<DualForm, Rational>> coefficients;  // nonzero only
  bool rational = true;
  bool nonnegative = true;
  bool reconstructs = true;
  bool supported = true;  // every mu lies in the orbit of lambda

  bool ok() const { return rational && nonnegative && reconstructs && supported; }
  std::string summary() const;
};

// Decomposes restrictions to N over the supercharacters of N, one per N x N
// orbit on J*.
class Restriction {
 public:
  Restriction(const Algebra& alg, const FiniteGroup& group, const FiniteGroup& n_group,
              const OrbitCensus& dual_census, std::span<const std::uint32_t> class_of);

  std::size_t n_character_count() const { return reps_.size(); }
  RestrictionReport report(const SupercharLabel& label, const ClassFunction& chi) const;

 private:
  const Algebra* alg_;
  const FiniteGroup* n_group_;
  const OrbitCensus* dual_census_;
  std::vector<std::uint32_t> n_to_class_;
  std::vector<DualForm> reps_;
  std::vector<std::vector<CycloNumber>> characters_;
  std::vector<CycloNumber> norms_;
};

}  // namespace supchar

#endif  // SUPCHAR_SUPERCHARACTER_HPP_
