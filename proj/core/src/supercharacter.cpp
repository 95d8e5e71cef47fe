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

#include "supchar/supercharacter.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "supchar/error.hpp"

namespace supchar {
namespace {

std::string block_set(Idempotent e) {
  std::string s = "{";
  for (std::uint32_t i = 0, n = 0; i < 32; ++i)
    if (e.has_block(i)) s += (n++ ? "," : "") + std::to_string(i + 1);
  return s + "}";
}

FieldElement pair(const GaloisField& f, const Vector& form, const Vector& x) {
  FieldElement acc{0};
  for (std::size_t i = 0; i < form.size(); ++i) acc = f.add(acc, f.mul(form[i], x[i]));
  return acc;
}

// Basis of {u in J : lambda(u y) = 0 for all y in J} in radical coordinates.
std::vector<Vector> right_annihilator(const Algebra& alg, const DualForm& lambda) {
  const std::uint32_t r = alg.radical_dim();
  Matrix m(r, r);
  for (std::uint32_t j = 0; j < r; ++j)
    for (std::uint32_t l = 0; l < r; ++l)
      m(j, l) = alg.evaluate(lambda, alg.mul(alg.basis(alg.radical_indices()[l]), alg.basis(alg.radical_indices()[j])));
  return kernel(alg.field(), m);
}

bool in_right_annihilator(const Algebra& alg, const DualForm& lambda, const AlgebraElement& x) {
  for (auto j : alg.radical_indices())
    if (alg.evaluate(lambda, alg.mul(x, alg.basis(j))).value != 0) return false;
  return true;
}

// Every F_q-combination of `basis`, as elements of J in full coordinates.
std::vector<AlgebraElement> span_elements(const Algebra& alg, const std::vector<Vector>& basis) {
  const auto& f = alg.field();
  const VectorCodec codec(f.size(), static_cast<std::uint32_t>(basis.size()));
  std::vector<AlgebraElement> out;
  Vector coeffs(basis.size()), x(alg.radical_dim());
  for (std::uint64_t k = 0; k < codec.space_size(); ++k) {
    codec.decode(k, coeffs);
    std::fill(x.begin(), x.end(), FieldElement{0});
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (coeffs[b].value != 0)
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = f.add(x[i], f.mul(coeffs[b], basis[b][i]));
    out.push_back(alg.from_radical(x));
  }
  return out;
}

// All units of S, in block-product order.
std::vector<AlgebraElement> s_units(const Algebra& alg) {
  std::vector<AlgebraElement> out{alg.zero()};
  for (std::uint32_t i = 0; i < alg.block_count(); ++i) {
    std::vector<AlgebraElement> next;
    const auto units = alg.block_units(i);
    for (const auto& s : out)
      for (const auto& u : units) next.push_back(alg.add(s, u));
    out = std::move(next);
  }
  return out;
}

bool fixes_e_blocks(const Algebra& alg, const AlgebraElement& h, Idempotent e) {
  for (std::uint32_t i = 0; i < alg.block_count(); ++i)
    if (e.has_block(i) && alg.block_component(h, i) != alg.block_component(alg.one(), i)) return false;
  return true;
}

std::uint32_t trace_of(const Algebra& alg, const DualForm& lambda, const AlgebraElement& x) {
  return alg.field().trace(alg.evaluate(lambda, x));
}

// Subtracting the least count gives the unique integer representative of
// sum_j c_j zeta_p^j with a zero entry, since the only relation among the
// p-th roots of unity is their vanishing sum.
std::vector<std::int64_t> normalized(std::span<const std::uint32_t> hist) {
  const auto lo = *std::min_element(hist.begin(), hist.end());
  std::vector<std::int64_t> out(hist.begin(), hist.end());
  for (auto& v : out) v -= lo;
  return out;
}

CycloNumber value_from_hist(std::uint32_t m, std::uint32_t p, std::span<const std::uint32_t> hist,
                            std::uint64_t denominator) {
  std::vector<std::int64_t> counts(m, 0);
  for (std::uint32_t j = 0; j < p; ++j) counts[(m / p) * j] = hist[j];
  return CycloNumber::from_root_counts(m, counts, Rational(static_cast<std::int64_t>(denominator)));
}

}  // namespace

std::string label_string(const Algebra&, const SupercharLabel& label) {
  std::ostringstream os;
  os << "e=" << block_set(label.e) << ";f=" << block_set(label.f) << ";c=[";
  for (std::size_t i = 0; i < label.theta.size(); ++i) os << (i ? "," : "") << label.theta[i];
  os << "];l=" << format_vector(label.lambda_rep.coeffs);
  return os.str();
}

std::vector<SupercharLabel> superchar_labels(const Algebra& alg, const OrbitCensus& dual_census) {
  if (dual_census.space != Space::kDual) throw std::invalid_argument("supercharacter labels need the J* census");
  std::vector<SupercharLabel> out;
  const std::uint32_t n = alg.block_count();
  for (const auto& o : dual_census.orbits) {
    const Idempotent e = o.support;
    const std::uint32_t free = e.complement(n).mask;
    for (std::uint32_t f = free;; f = (f - 1) & free) {
      std::vector<std::vector<std::uint64_t>> thetas{std::vector<std::uint64_t>(n, 0)};
      for (std::uint32_t i = 0; i < n; ++i) {
        if (!((f >> i) & 1u)) continue;
        std::vector<std::vector<std::uint64_t>> next;
        for (const auto& t : thetas)
          for (std::uint64_t c = 1; c < alg.block_unit_count(i); ++c) {
            auto u = t;
            u[i] = c;
            next.push_back(std::move(u));
          }
        thetas = std::move(next);
      }
      for (auto& t : thetas) out.push_back({e, Idempotent{f}, std::move(t), DualForm{o.support_rep}});
      if (f == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

StabilizerData stabilizer_data(const Algebra& alg, const FiniteGroup& group, const DualForm& lambda, Idempotent e) {
  if (peirce_support(alg, lambda.coeffs, Space::kDual) != e || is_singular(alg, lambda.coeffs, Space::kDual, e))
    throw Error(ErrorCode::kNotRegular,
                "form " + format_vector(lambda.coeffs) + " is not regular in J_e* for e=" + block_set(e));
  StabilizerData out;
  out.j_right_basis = right_annihilator(alg, lambda);
  const auto j_right = span_elements(alg, out.j_right_basis);
  auto index = [&](const AlgebraElement& x) {
    const auto i = group.index_of(x.coeffs);
    if (i == KeyIndex::kAbsent) throw Error(ErrorCode::kGroupTooLarge, "stabilizer element outside the group");
    return i;
  };
  for (const auto& u : j_right) out.n_right.push_back(index(alg.add(alg.one(), u)));

  std::vector<std::uint32_t> h_right_left;
  std::vector<AlgebraElement> h_eprime;
  for (const auto& h : s_units(alg)) {
    bool right = true, left = true;
    for (auto j : alg.radical_indices()) {
      const auto b = alg.basis(j);
      const auto base = alg.evaluate(lambda, b);
      right = right && alg.evaluate(lambda, alg.mul(h, b)) == base;
      left = left && alg.evaluate(lambda, alg.mul(b, h)) == base;
    }
    const bool member = fixes_e_blocks(alg, h, e);
    if (member) h_eprime.push_back(h);
    if (right && left) h_right_left.push_back(index(h));
    if (member) out.h_eprime.push_back(index(h));
  }
  std::sort(out.n_right.begin(), out.n_right.end());
  std::sort(out.h_eprime.begin(), out.h_eprime.end());
  std::sort(h_right_left.begin(), h_right_left.end());
  out.stabilizer_splits = h_right_left == out.h_eprime;
  for (const auto& h : h_eprime)
    for (const auto& u : j_right) out.g_lambda.push_back(index(alg.mul(h, alg.add(alg.one(), u))));
  std::sort(out.g_lambda.begin(), out.g_lambda.end());
  out.g_lambda.erase(std::unique(out.g_lambda.begin(), out.g_lambda.end()), out.g_lambda.end());
  return out;
}

CycloNumber theta_value(const Algebra& alg, std::span<const std::uint64_t> theta, const AlgebraElement& h) {
  const std::uint32_t m = alg.cyclotomic_order();
  std::uint64_t k = 0;
  for (std::uint32_t i = 0; i < alg.block_count(); ++i) {
    if (theta[i] == 0) continue;
    const auto order = alg.block_unit_count(i);
    k = (k + (m / order) * ((theta[i] * alg.block_dlog(i, h)) % order)) % m;
  }
  return CycloNumber::root(m, static_cast<std::int64_t>(k));
}

CycloNumber xi(const Algebra& alg, const SupercharLabel& label, const AlgebraElement& g) {
  const auto h = alg.s_part(g);
  const auto x = alg.j_part(g);
  for (std::uint32_t i = 0; i < alg.block_count(); ++i)
    if (is_zero_vector(alg.block_component(h, i)))
      throw Error(ErrorCode::kNotInStabilizer, "element is not a unit");
  if (!fixes_e_blocks(alg, h, label.e))
    throw Error(ErrorCode::kNotInStabilizer, "S-part is outside H_{e'}");
  if (!in_right_annihilator(alg, label.lambda_rep, x))
    throw Error(ErrorCode::kNotInStabilizer, "radical part is outside J_right");
  const std::uint32_t m = alg.cyclotomic_order();
  const std::uint32_t p = alg.field().characteristic();
  const auto add = CycloNumber::root(m, static_cast<std::int64_t>((m / p) * trace_of(alg, label.lambda_rep, x)));
  return theta_value(alg, label.theta, h) * add;
}

Inducer::Inducer(const Algebra& alg, const FiniteGroup& group, std::span<const SuperclassRecord> classes)
    : alg_(&alg), group_(&group), class_of_(group.size(), KeyIndex::kAbsent) {
  for (std::uint32_t k = 0; k < classes.size(); ++k) {
    sizes_.push_back(classes[k].size);
    class_rep_.push_back(group.index_of_key(classes[k].members.front()));
    for (auto key : classes[k].members) {
      const auto i = group.index_of_key(key);
      if (i == KeyIndex::kAbsent || class_of_[i] != KeyIndex::kAbsent)
        throw Error(ErrorCode::kPartitionMismatch, "superclasses do not partition the group");
      class_of_[i] = k;
    }
  }
  for (auto c : class_of_)
    if (c == KeyIndex::kAbsent) throw Error(ErrorCode::kPartitionMismatch, "superclasses do not cover the group");
  identity_class_ = class_of_[group.identity()];
}

std::vector<ClassFunction> Inducer::induce_form(const DualForm& lambda, Idempotent e,
                                                std::span<const SupercharLabel* const> labels) const {
  const auto& alg = *alg_;
  const auto& group = *group_;
  const auto& f = alg.field();
  const std::uint32_t p = f.characteristic();
  const std::uint32_t m = alg.cyclotomic_order();
  const auto stab = stabilizer_data(alg, group, lambda, e);

  // chi(g) = (1/|G_lambda|) sum_{s in G, c in G_lambda, s c s^-1 = g} xi(c).
  // The S-part of s c s^-1 is that of c, so theta(h) factors out and only
  // the additive part is tallied per g.
  std::vector<std::uint32_t> traces;
  for (auto c : stab.g_lambda) traces.push_back(trace_of(alg, lambda, alg.j_part(group.element(c))));
  std::vector<std::uint32_t> hist(static_cast<std::size_t>(group.size()) * p, 0);
  Vector y(alg.dim());
  for (std::uint32_t s = 0; s < group.size(); ++s) {
    const Matrix conj = group.conjugation_matrix(s);
    for (std::size_t k = 0; k < stab.g_lambda.size(); ++k) {
      conj.apply_into(f, group.element(stab.g_lambda[k]).coeffs, y);
      ++hist[static_cast<std::size_t>(group.index_of(y)) * p + traces[k]];
    }
  }
  auto hist_of = [&](std::uint32_t g) { return std::span<const std::uint32_t>(hist.data() + std::size_t{g} * p, p); };

  std::vector<CycloNumber> base(sizes_.size());
  std::vector<std::vector<std::int64_t>> canon(sizes_.size());
  for (std::uint32_t k = 0; k < sizes_.size(); ++k) {
    canon[k] = normalized(hist_of(class_rep_[k]));
    base[k] = value_from_hist(m, p, hist_of(class_rep_[k]), stab.g_lambda.size());
  }
  for (std::uint32_t g = 0; g < group.size(); ++g)
    if (normalized(hist_of(g)) != canon[class_of_[g]])
      throw Error(ErrorCode::kNotConstantOnSuperclass,
                  "induced character from l=" + format_vector(lambda.coeffs) + " differs inside the superclass of " +
                      format_vector(group.element(g).coeffs));

  std::vector<ClassFunction> out;
  for (const auto* label : labels) {
    ClassFunction cf;
    for (std::uint32_t k = 0; k < sizes_.size(); ++k) {
      if (base[k].is_zero()) {
        cf.values.push_back(base[k]);
        continue;
      }
      const auto h = alg.s_part(group.element(class_rep_[k]));
      cf.values.push_back(base[k] * theta_value(alg, label->theta, h));
    }
    out.push_back(std::move(cf));
  }
  return out;
}

ClassFunction Inducer::induce(const SupercharLabel& label) const {
  const SupercharLabel* ptr = &label;
  return induce_form(label.lambda_rep, label.e, std::span<const SupercharLabel* const>(&ptr, 1)).front();
}

std::vector<ClassFunction> Inducer::induce_all(std::span<const SupercharLabel> labels, unsigned jobs) const {
  std::map<std::pair<DualForm, Idempotent>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < labels.size(); ++i) groups[{labels[i].lambda_rep, labels[i].e}].push_back(i);
  std::vector<const std::pair<const std::pair<DualForm, Idempotent>, std::vector<std::size_t>>*> work;
  for (const auto& g : groups) work.push_back(&g);

  std::vector<ClassFunction> out(labels.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t w; (w = next.fetch_add(1)) < work.size();) {
      try {
        const auto& [key, idx] = *work[w];
        std::vector<const SupercharLabel*> ptrs;
        for (auto i : idx) ptrs.push_back(&labels[i]);
        auto values = induce_form(key.first, key.second, ptrs);
        for (std::size_t j = 0; j < idx.size(); ++j) out[idx[j]] = std::move(values[j]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = work.size();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(work.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

CycloNumber inner_product(std::span<const std::uint64_t> sizes, std::uint64_t group_order,
                          const ClassFunction& phi, const ClassFunction& psi) {
  if (phi.values.size() != sizes.size() || psi.values.size() != sizes.size())
    throw Error(ErrorCode::kPartitionMismatch, "class functions are defined on different partitions");
  if (sizes.empty()) throw Error(ErrorCode::kPartitionMismatch, "empty partition");
  CycloNumber acc = CycloNumber::zero(phi.values.front().order());
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (phi.values[k].is_zero() || psi.values[k].is_zero()) continue;
    acc += phi.values[k] * psi.values[k].conj() * Rational(static_cast<std::int64_t>(sizes[k]));
  }
  return acc * Rational(1, static_cast<std::int64_t>(group_order));
}

std::vector<CycloNumber> n_supercharacter(const Algebra& alg, const FiniteGroup& n_group, const DualForm& mu) {
  const auto& f = alg.field();
  const std::uint32_t p = f.characteristic();
  const std::uint32_t m = alg.cyclotomic_order();
  std::vector<std::uint32_t> stab, traces;
  for (const auto& u : span_elements(alg, right_annihilator(alg, mu))) {
    stab.push_back(n_group.index_of(alg.add(alg.one(), u).coeffs));
    traces.push_back(trace_of(alg, mu, u));
  }
  std::vector<std::uint32_t> hist(static_cast<std::size_t>(n_group.size()) * p, 0);
  Vector y(alg.dim());
  for (std::uint32_t s = 0; s < n_group.size(); ++s) {
    const Matrix conj = n_group.conjugation_matrix(s);
    for (std::size_t k = 0; k < stab.size(); ++k) {
      conj.apply_into(f, n_group.element(stab[k]).coeffs, y);
      ++hist[static_cast<std::size_t>(n_group.index_of(y)) * p + traces[k]];
    }
  }
  std::vector<CycloNumber> out;
  for (std::uint32_t g = 0; g < n_group.size(); ++g)
    out.push_back(value_from_hist(m, p, std::span<const std::uint32_t>(hist.data() + std::size_t{g} * p, p),
                                  stab.size()));
  return out;
}

std::string RestrictionReport::summary() const {
  std::map<Rational, std::size_t> multiset;
  for (const auto& [mu, c] : coefficients) ++multiset[c];
  std::ostringstream os;
  os << coefficients.size() << " constituents, coefficients {";
  bool first = true;
  for (const auto& [c, n] : multiset) {
    os << (first ? "" : ", ") << c << "x" << n;
    first = false;
  }
  os << "}";
  if (!rational) os << " non-rational";
  if (!nonnegative) os << " negative";
  if (!reconstructs) os << " no-reconstruction";
  if (!supported) os << " outside-orbit";
  return os.str();
}

Restriction::Restriction(const Algebra& alg, const FiniteGroup& group, const FiniteGroup& n_group,
                         const OrbitCensus& dual_census, std::span<const std::uint32_t> class_of)
    : alg_(&alg), n_group_(&n_group), dual_census_(&dual_census) {
  for (std::uint32_t i = 0; i < n_group.size(); ++i) {
    const auto g = group.index_of(n_group.element(i).coeffs);
    if (g == KeyIndex::kAbsent) throw Error(ErrorCode::kPartitionMismatch, "N is not inside G");
    n_to_class_.push_back(class_of[g]);
  }
  // N x N orbits on J*: the triples with trivial torus part.
  const auto one = alg.one();
  std::vector<AffineMap> gens, samples;
  for (const auto& t : generating_triples(alg))
    if (t.t.element == one) gens.push_back(action_map(alg, t, Space::kDual));
  for (const auto& t : random_triples(alg, kClosureSamples, kClosureSeed))
    samples.push_back(action_map(alg, make_triple(alg, one, t.a.element, t.b.element), Space::kDual));
  const OrbitFinder finder(alg.field_ptr(), alg.radical_dim(), std::move(gens), std::move(samples));
  std::vector<std::uint64_t> seeds(finder.codec().space_size());
  for (std::uint64_t k = 0; k < seeds.size(); ++k) seeds[k] = k;
  KeyIndex index(finder.codec().space_size());
  for (const auto& orb : finder.partition(seeds, index)) {
    reps_.push_back(DualForm{finder.codec().decode(orb.front())});
    characters_.push_back(n_supercharacter(alg, n_group, reps_.back()));
    CycloNumber norm = CycloNumber::zero(alg.cyclotomic_order());
    for (const auto& v : characters_.back()) norm += v * v.conj();
    norms_.push_back(norm * Rational(1, static_cast<std::int64_t>(n_group.size())));
  }
}

RestrictionReport Restriction::report(const SupercharLabel& label, const ClassFunction& chi) const {
  const auto& alg = *alg_;
  const std::uint32_t m = alg.cyclotomic_order();
  const VectorCodec codec(alg.field().size(), alg.radical_dim());
  const auto lambda_orbit = dual_census_->orbit_of[codec.encode(label.lambda_rep.coeffs)];
  RestrictionReport rep;
  std::vector<CycloNumber> rebuilt(n_group_->size(), CycloNumber::zero(m));
  for (std::size_t r = 0; r < reps_.size(); ++r) {
    CycloNumber ip = CycloNumber::zero(m);
    for (std::uint32_t i = 0; i < n_group_->size(); ++i) {
      const auto& v = chi.values[n_to_class_[i]];
      if (!v.is_zero()) ip += v * characters_[r][i].conj();
    }
    ip *= Rational(1, static_cast<std::int64_t>(n_group_->size()));
    if (ip.is_zero()) continue;
    if (!ip.is_rational()) {
      rep.rational = false;
      continue;
    }
    const Rational c = ip.to_rational() / norms_[r].to_rational();
    if (c < 0) rep.nonnegative = false;
    if (dual_census_->orbit_of[codec.encode(reps_[r].coeffs)] != lambda_orbit) rep.supported = false;
    rep.coefficients.emplace_back(reps_[r], c);
    for (std::uint32_t i = 0; i < n_group_->size(); ++i) rebuilt[i] += characters_[r][i] * c;
  }
  for (std::uint32_t i = 0; i < n_group_->size() && rep.reconstructs; ++i)
    rep.reconstructs = rebuilt[i] == chi.values[n_to_class_[i]];
  return rep;
}

}  // namespace supchar
