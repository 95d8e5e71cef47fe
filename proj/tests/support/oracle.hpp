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

#ifndef SUPCHAR_TESTS_ORACLE_HPP_
#define SUPCHAR_TESTS_ORACLE_HPP_

// Test-only reference for T(n, p), p prime, built on plain integer matrices.
// Shares no code with the library beyond the standard library.

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using Mat = std::vector<int>;  // n x n, row-major, entries in [0, p)
using Roots = std::vector<std::pair<int, int>>;  // 1-based (i, j), i < j

class TriangularOracle {
 public:
  TriangularOracle(int n, int p);

  int n() const { return n_; }
  int p() const { return p_; }
  int primitive_root() const { return g_; }
  const std::vector<Mat>& group() const { return group_; }

  Mat multiply(const Mat& a, const Mat& b) const;
  Mat inverse(const Mat& a) const;
  Mat identity() const;

  // Rook placements on the positive roots.
  std::vector<Roots> basic_subsets() const;

  // h on the diagonal plus x_D above it.
  Mat element(const std::vector<int>& h, const Roots& d) const;

  // chi_{theta,D}(g) by summing xi over s in G with s^-1 g s in G_lambda.
  std::complex<double> value(const std::vector<int>& c, const Roots& d, const Mat& g) const;

  // |G_lambda| for lambda = lambda_D.
  std::uint64_t stabilizer_order(const Roots& d) const;

  // Orbit size of g under g -> 1 + t a (g - 1) b^-1 t^-1.
  std::uint64_t superclass_size(const Mat& g) const;

  // Size of the conjugacy class of g.
  std::uint64_t conjugacy_class_size(const Mat& g) const;

 private:
  bool in_stabilizer(const Mat& y, const Roots& d, std::uint32_t touched) const;
  int lambda(const Mat& x, const Roots& d) const;
  int dlog(int a) const { return log_[a]; }

  int n_;
  int p_;
  int g_;
  std::vector<int> log_;
  std::vector<Mat> group_;
};

}  // namespace oracle

#endif  // SUPCHAR_TESTS_ORACLE_HPP_
