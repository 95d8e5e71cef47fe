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

#include "supchar/linalg.hpp"

namespace supchar {
namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(const GaloisField& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).value == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const FieldElement inv = f.inv(m(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).value == 0) continue;
      const FieldElement factor = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Vector Matrix::apply(const GaloisField& f, std::span<const FieldElement> v) const {
  Vector out(rows_);
  apply_into(f, v, out);
  return out;
}

void Matrix::apply_into(const GaloisField& f, std::span<const FieldElement> v,
                        std::span<FieldElement> out) const {
  for (std::size_t r = 0; r < rows_; ++r) {
    FieldElement acc{0};
    const FieldElement* row = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c)
      if (row[c].value != 0 && v[c].value != 0) acc = f.add(acc, f.mul(row[c], v[c]));
    out[r] = acc;
  }
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix multiply(const GaloisField& f, const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElement x = a(i, k);
      if (x.value == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
    }
  return out;
}

std::size_t rank(const GaloisField& f, Matrix m) { return rref(f, m).size(); }

std::vector<Vector> kernel(const GaloisField& f, const Matrix& m) {
  Matrix r = m;
  const auto pivots = rref(f, r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const GaloisField& f, const Matrix& m, std::span<const FieldElement> b) {
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto pivots = rref(f, aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

std::vector<Vector> row_space_basis(const GaloisField& f, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return {};
  Matrix m(vectors.size(), vectors.front().size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = vectors[i][j];
  const auto pivots = rref(f, m);
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    auto row = m.row(i);
    basis.emplace_back(row.begin(), row.end());
  }
  return basis;
}

bool is_zero_vector(std::span<const FieldElement> v) {
  for (auto x : v)
    if (x.value != 0) return false;
  return true;
}

}  // namespace supchar
