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

#include "supchar/triangular.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "supchar/error.hpp"

namespace supchar {
namespace {

std::string roots_string(const BasicSubset& d) {
  std::string s = "{";
  for (std::size_t k = 0; k < d.roots.size(); ++k)
    s += (k ? ",(" : "(") + std::to_string(d.roots[k].i) + "," + std::to_string(d.roots[k].j) + ")";
  return s + "}";
}

// Runs body(k) for k in [0, count) on `jobs` threads; rethrows the first failure.
template <typename Body>
void parallel_for(std::size_t count, unsigned jobs, Body body) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < count;) {
      try {
        body(k);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

void extend_subsets(const std::vector<Root>& roots, std::size_t from, std::uint32_t rows, std::uint32_t cols,
                    std::vector<Root>& current, std::vector<BasicSubset>& out) {
  out.push_back(BasicSubset{current});
  for (std::size_t k = from; k < roots.size(); ++k) {
    const auto r = roots[k];
    if ((rows >> r.i) & 1u || (cols >> r.j) & 1u) continue;
    current.push_back(r);
    extend_subsets(roots, k + 1, rows | (1u << r.i), cols | (1u << r.j), current, out);
    current.pop_back();
  }
}

// Vectors over `alphabet` at free positions and `fixed` elsewhere, in lex order.
template <typename T>
std::vector<std::vector<T>> fill_free(std::uint32_t n, std::uint32_t touched, const std::vector<T>& alphabet, T fixed) {
  std::vector<std::vector<T>> out{std::vector<T>()};
  for (std::uint32_t pos = 0; pos < n; ++pos) {
    std::vector<std::vector<T>> next;
    const bool free = !((touched >> pos) & 1u);
    for (const auto& prefix : out) {
      if (!free) {
        next.push_back(prefix);
        next.back().push_back(fixed);
        continue;
      }
      for (const auto& a : alphabet) {
        next.push_back(prefix);
        next.back().push_back(a);
      }
    }
    out = std::move(next);
  }
  return out;
}

Rational power(std::uint64_t base, std::uint64_t exp) {
  BigInt r = 1;
  for (std::uint64_t k = 0; k < exp; ++k) r *= base;
  return Rational(r);
}

}  // namespace

bool BasicSubset::contains(Root r) const { return std::binary_search(roots.begin(), roots.end(), r); }

std::uint32_t BasicSubset::touched() const {
  std::uint32_t mask = 0;
  for (const auto& r : roots) mask |= (1u << (r.i - 1)) | (1u << (r.j - 1));
  return mask;
}

std::uint32_t matrix_unit_index(std::uint32_t n, std::uint32_t i, std::uint32_t j) {
  if (i == j) return i - 1;
  std::uint32_t offset = n;
  for (std::uint32_t a = 1; a < i; ++a) offset += n - a;
  return offset + (j - i - 1);
}

AlgebraSpec make_triangular_spec(std::uint32_t n, const FieldSpec& field) {
  if (n < 2) throw Error(ErrorCode::kBadSize, "n must be at least 2, got " + std::to_string(n));
  if (n > 16) throw Error(ErrorCode::kBadSize, "n must be at most 16, got " + std::to_string(n));
  AlgebraSpec spec;
  spec.field = field;
  spec.dim = n * (n + 1) / 2;
  spec.unit.assign(spec.dim, FieldElement{0});
  for (std::uint32_t i = 1; i <= n; ++i) {
    spec.unit[i - 1] = field->one();
    BlockSpec blk;
    blk.idempotent.assign(spec.dim, FieldElement{0});
    blk.idempotent[i - 1] = field->one();
    blk.basis = {i - 1};
    spec.blocks.push_back(std::move(blk));
  }
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = i + 1; j <= n; ++j) spec.radical_basis.push_back(matrix_unit_index(n, i, j));
  // E_ij E_jk = E_ik over all i <= j <= k.
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = i; j <= n; ++j)
      for (std::uint32_t k = j; k <= n; ++k)
        spec.mul.push_back({matrix_unit_index(n, i, j), matrix_unit_index(n, j, k),
                            {{matrix_unit_index(n, i, k), field->one()}}});
  return spec;
}

Algebra make_triangular(std::uint32_t n, const FieldSpec& field) {
  return validate_algebra(make_triangular_spec(n, field));
}

std::vector<BasicSubset> basic_subsets(std::uint32_t n) {
  if (n < 2) throw Error(ErrorCode::kBadSize, "n must be at least 2, got " + std::to_string(n));
  std::vector<Root> roots;
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = i + 1; j <= n; ++j) roots.push_back({i, j});
  std::vector<BasicSubset> out;
  std::vector<Root> current;
  extend_subsets(roots, 0, 0, 0, current, out);
  std::sort(out.begin(), out.end(), [](const BasicSubset& a, const BasicSubset& b) {
    if (a.roots.size() != b.roots.size()) return a.roots.size() < b.roots.size();
    return a.roots < b.roots;
  });
  return out;
}

bool is_regular_d(const BasicSubset& d, std::uint32_t n) {
  return d.touched() == ((n >= 32 ? 0u : (1u << n)) - 1u);
}

AlgebraElement x_of(const Algebra& alg, std::uint32_t n, const BasicSubset& d) {
  AlgebraElement x = alg.zero();
  for (const auto& r : d.roots) x.coeffs[matrix_unit_index(n, r.i, r.j)] = alg.field().one();
  return x;
}

DualForm lambda_of(const Algebra& alg, std::uint32_t n, const BasicSubset& d) {
  return DualForm{alg.radical_coords(x_of(alg, n, d))};
}

TriLabels triangular_labels(std::uint32_t n, const GaloisField& field) {
  TriLabels out;
  std::vector<FieldElement> units;
  for (std::uint32_t v = 1; v < field.size(); ++v) units.push_back(FieldElement{v});
  std::vector<std::uint64_t> exponents(field.size() - 1);
  std::iota(exponents.begin(), exponents.end(), std::uint64_t{0});
  const auto subsets = basic_subsets(n);
  for (const auto& d : subsets)
    for (auto& h : fill_free(n, d.touched(), units, field.one())) out.classes.push_back({std::move(h), d});
  for (const auto& d : subsets)
    for (auto& c : fill_free<std::uint64_t>(n, d.touched(), exponents, 0)) out.characters.push_back({std::move(c), d});
  return out;
}

std::uint64_t triangular_label_count(std::uint32_t n, std::uint64_t q) {
  std::uint64_t total = 0;
  for (const auto& d : basic_subsets(n)) {
    std::uint64_t term = 1;
    for (std::uint32_t k = 0; k < n - static_cast<std::uint32_t>(std::popcount(d.touched())); ++k) term *= q - 1;
    total += term;
  }
  return total;
}

std::string label_string(const TriSuperclassLabel& label) {
  std::ostringstream os;
  os << "h=[";
  for (std::size_t i = 0; i < label.h.size(); ++i) os << (i ? "," : "") << label.h[i].value;
  os << "];D'=" << roots_string(label.dprime);
  return os.str();
}

std::string label_string(const TriSupercharLabel& label) {
  std::ostringstream os;
  os << "c=[";
  for (std::size_t i = 0; i < label.c.size(); ++i) os << (i ? "," : "") << label.c[i];
  os << "];D=" << roots_string(label.d);
  return os.str();
}

DeltaFactors delta_factors(const BasicSubset& d, const std::vector<FieldElement>& h, const BasicSubset& dprime) {
  DeltaFactors out;
  for (const auto& g : d.roots)
    for (const auto& gp : dprime.roots) {
      if (gp.i == g.i && g.i < gp.j && gp.j < g.j) out.dprime = 0;
      if (gp.j == g.j && g.i < gp.i && gp.i < g.j) out.ddouble = 0;
    }
  const auto touched = d.touched();
  for (std::uint32_t i = 0; i < h.size(); ++i)
    if ((touched >> i) & 1u && h[i].value != 1) out.dzero = 0;
  return out;
}

MandS m_and_s(const GaloisField& field, const BasicSubset& d, const std::vector<FieldElement>& h,
              const BasicSubset& dprime, TorusExponent exponent) {
  // g - 1 for g = h + x_{D'}, 1-based.
  auto entry = [&](std::uint32_t r, std::uint32_t c) {
    if (r == c) return field.sub(h[r - 1], field.one());
    return dprime.contains({r, c}) ? field.one() : FieldElement{0};
  };
  MandS out;
  for (const auto& g : d.roots) {
    const std::uint32_t lo = g.i + 1, hi = g.j - 1;
    if (lo > hi) continue;
    const std::uint32_t size = hi - lo + 1;
    Matrix p(size, size);
    std::uint64_t zero_rows = 0;
    for (std::uint32_t r = 0; r < size; ++r) {
      bool zero = true;
      for (std::uint32_t c = 0; c < size; ++c) {
        p(r, c) = entry(lo + r, lo + c);
        zero = zero && p(r, c).value == 0;
      }
      zero_rows += zero;
    }
    const auto corank = size - rank(field, p);
    if (corank != zero_rows)
      throw std::logic_error("window of (" + std::to_string(g.i) + "," + std::to_string(g.j) +
                             ") has a row or column with two nonzero entries");
    out.m += zero_rows;
  }
  std::uint64_t common = 0;
  for (const auto& g : d.roots) common += dprime.contains(g);
  out.s = exponent == TorusExponent::kLiteral ? 2 * d.roots.size() - common
                                              : static_cast<std::uint64_t>(std::popcount(d.touched())) - common;
  return out;
}

bool is_chained(const BasicSubset& d) {
  std::uint32_t rows = 0, cols = 0;
  for (const auto& g : d.roots) {
    rows |= 1u << g.i;
    cols |= 1u << g.j;
  }
  return (rows & cols) != 0;
}

CycloNumber triangular_value(const GaloisField& field, const TriSupercharLabel& chi, const TriSuperclassLabel& cls,
                             TorusExponent exponent) {
  const std::uint32_t q = field.size();
  const auto order = static_cast<std::uint32_t>(lcm_u64(field.characteristic(), q - 1));
  const auto delta = delta_factors(chi.d, cls.h, cls.dprime);
  if (delta.dprime * delta.ddouble * delta.dzero == 0) return CycloNumber::zero(order);
  const auto ms = m_and_s(field, chi.d, cls.h, cls.dprime, exponent);
  std::size_t common = 0;
  for (const auto& g : chi.d.roots) common += cls.dprime.contains(g);
  Rational magnitude = power(q, ms.m) * power(q - 1, ms.s);
  if (common % 2) magnitude = -magnitude;
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < chi.c.size(); ++i)
    if (chi.c[i] != 0) k = (k + chi.c[i] * field.dlog(cls.h[i])) % (q - 1);
  const auto theta = CycloNumber::root(order, static_cast<std::int64_t>((order / (q - 1)) * k));
  return theta * magnitude;
}

std::uint64_t triangular_group_order(std::uint32_t n, std::uint64_t q) {
  std::uint64_t order = 1;
  const std::uint64_t limit = std::uint64_t{1} << 62;
  for (std::uint32_t k = 0; k < n; ++k) {
    if (order > limit / std::max<std::uint64_t>(q - 1, 1)) return 0;
    order *= q - 1;
  }
  for (std::uint32_t k = 0; k < n * (n - 1) / 2; ++k) {
    if (order > limit / q) return 0;
    order *= q;
  }
  return order;
}

AlgebraElement superclass_element(const Algebra& alg, std::uint32_t n, const TriSuperclassLabel& label) {
  AlgebraElement g = x_of(alg, n, label.dprime);
  for (std::uint32_t i = 0; i < n; ++i) g.coeffs[i] = label.h[i];
  return g;
}

CharacterTable closed_form_table(std::uint32_t n, const FieldSpec& field, const TriangularOptions& options) {
  const auto alg = make_triangular(n, field);
  const auto group_order = triangular_group_order(n, field->size());
  const auto count = triangular_label_count(n, field->size());
  if (count * count > options.cell_bound)
    throw Error(ErrorCode::kTableTooLarge, std::to_string(count) + "^2 cells exceed the bound of " +
                                               std::to_string(options.cell_bound));
  if (group_order == 0 || group_order > 64 * options.group_bound)
    throw Error(ErrorCode::kGroupTooLarge, "superclass sizes need a BFS over |G| = " +
                                               (group_order ? std::to_string(group_order) : std::string("overflow")));
  const auto labels = triangular_labels(n, *field);
  CharacterTable t;
  t.order = alg.cyclotomic_order();
  t.group_order = group_order;
  for (const auto& c : labels.classes) t.col_labels.push_back(label_string(c));
  for (const auto& r : labels.characters) t.row_labels.push_back(label_string(r));
  t.sizes.assign(labels.classes.size(), 0);
  parallel_for(labels.classes.size(), options.jobs, [&](std::size_t c) {
    t.sizes[c] = superclass_of(alg, superclass_element(alg, n, labels.classes[c])).size();
  });
  t.values.assign(labels.characters.size(), {});
  parallel_for(labels.characters.size(), options.jobs, [&](std::size_t r) {
    std::vector<CycloNumber> row;
    for (const auto& c : labels.classes) row.push_back(triangular_value(*field, labels.characters[r], c, options.exponent));
    t.values[r] = std::move(row);
  });
  t.identity_col = 0;  // h = 1, D' = {} leads the column order
  return t;
}

SupercharLabel general_label(const Algebra& alg, std::uint32_t n, const OrbitCensus& dual_census,
                             const TriSupercharLabel& label) {
  SupercharLabel out;
  out.e = Idempotent{label.d.touched()};
  for (std::uint32_t i = 0; i < n; ++i)
    if (label.c[i] != 0) out.f.mask |= 1u << i;
  out.theta = label.c;
  const auto lambda = lambda_of(alg, n, label.d);
  const VectorCodec codec(alg.field().size(), alg.radical_dim());
  const auto& orb = dual_census.orbits[dual_census.orbit_of[codec.encode(lambda.coeffs)]];
  if (orb.support != out.e)
    throw Error(ErrorCode::kNotRegular, "orbit of lambda_D has support " + std::to_string(orb.support.mask) +
                                            ", expected " + std::to_string(out.e.mask));
  out.lambda_rep = DualForm{orb.support_rep};
  return out;
}

BruteForce brute_force(std::uint32_t n, const FieldSpec& field, const TriangularOptions& options) {
  BruteForce bf;
  const auto group_order = triangular_group_order(n, field->size());
  if (group_order == 0 || group_order > options.group_bound)
    throw Error(ErrorCode::kGroupTooLarge,
                "|G| = " + (group_order ? std::to_string(group_order) : std::string("overflow")) +
                    " exceeds the enumeration bound of " + std::to_string(options.group_bound));
  bf.algebra = std::make_shared<const Algebra>(make_triangular(n, field));
  TheoryOptions topts;
  topts.group_bound = options.group_bound;
  topts.space_bound = options.space_bound;
  topts.jobs = options.jobs;
  bf.theory = Theory::build(bf.algebra, topts);
  bf.labels = triangular_labels(n, *field);
  const auto& alg = *bf.algebra;
  const auto& theory = *bf.theory;

  const auto& general = theory.labels();
  std::vector<bool> row_used(general.size(), false);
  for (const auto& tri : bf.labels.characters) {
    const auto g = general_label(alg, n, theory.dual_census(), tri);
    const auto it = std::lower_bound(general.begin(), general.end(), g);
    if (it == general.end() || !(*it == g))
      throw Error(ErrorCode::kLabelMismatch, label_string(tri) + " has no generic counterpart");
    const auto idx = static_cast<std::uint32_t>(it - general.begin());
    if (row_used[idx]) throw Error(ErrorCode::kLabelMismatch, label_string(tri) + " collides with another label");
    row_used[idx] = true;
    bf.row_of.push_back(idx);
  }
  if (bf.row_of.size() != general.size())
    throw Error(ErrorCode::kLabelMismatch, std::to_string(bf.row_of.size()) + " triangular supercharacters vs " +
                                               std::to_string(general.size()) + " generic ones");

  const auto& class_of = theory.inducer().class_of();
  std::vector<bool> col_used(theory.superclasses().size(), false);
  for (const auto& tri : bf.labels.classes) {
    const auto gi = theory.group().index_of(superclass_element(alg, n, tri).coeffs);
    const auto idx = class_of[gi];
    if (col_used[idx]) throw Error(ErrorCode::kLabelMismatch, label_string(tri) + " shares a superclass");
    col_used[idx] = true;
    bf.col_of.push_back(idx);
  }
  if (bf.col_of.size() != theory.superclasses().size())
    throw Error(ErrorCode::kLabelMismatch, std::to_string(bf.col_of.size()) + " triangular superclasses vs " +
                                               std::to_string(theory.superclasses().size()) + " orbits");

  auto& t = bf.table;
  t.order = alg.cyclotomic_order();
  t.group_order = theory.group().size();
  for (std::size_t c = 0; c < bf.col_of.size(); ++c) {
    t.col_labels.push_back(label_string(bf.labels.classes[c]));
    t.sizes.push_back(theory.superclasses()[bf.col_of[c]].size);
    if (bf.col_of[c] == theory.inducer().identity_class()) t.identity_col = c;
  }
  for (std::size_t r = 0; r < bf.row_of.size(); ++r) {
    t.row_labels.push_back(label_string(bf.labels.characters[r]));
    std::vector<CycloNumber> row;
    for (auto c : bf.col_of) row.push_back(theory.characters()[bf.row_of[r]].values[c]);
    t.values.push_back(std::move(row));
  }
  return bf;
}

}  // namespace supchar
