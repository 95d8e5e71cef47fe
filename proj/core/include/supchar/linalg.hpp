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

#ifndef SUPCHAR_LINALG_HPP_
#define SUPCHAR_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "supchar/galois_field.hpp"

namespace supchar {

using Vector = std::vector<FieldElement>;

// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const FieldElement> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  Vector apply(const GaloisField& f, std::span<const FieldElement> v) const;
  // Same as apply(), writing into `out` (size rows()).
  void apply_into(const GaloisField& f, std::span<const FieldElement> v,
                  std::span<FieldElement> out) const;
  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

Matrix multiply(const GaloisField& f, const Matrix& a, const Matrix& b);
std::size_t rank(const GaloisField& f, Matrix m);
// Basis of {v : m v = 0}.
std::vector<Vector> kernel(const GaloisField& f, const Matrix& m);
// Some v with m v = b, if the system is consistent.
std::optional<Vector> solve(const GaloisField& f, const Matrix& m, std::span<const FieldElement> b);
// Reduced row echelon basis of the span of `vectors` (all of equal length).
std::vector<Vector> row_space_basis(const GaloisField& f, const std::vector<Vector>& vectors);

bool is_zero_vector(std::span<const FieldElement> v);

}  // namespace supchar

#endif  // SUPCHAR_LINALG_HPP_
