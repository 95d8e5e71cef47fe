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

#ifndef SUPCHAR_ALGEBRA_JSON_HPP_
#define SUPCHAR_ALGEBRA_JSON_HPP_

#include <filesystem>
#include <string>

#include "supchar/algebra.hpp"

namespace supchar {

// Parses the algebra spec format:
//   {"p", "k", "dim", "unit", "mul": [[i, j, [[l, c], ...]], ...],
//    "blocks": [{"idempotent", "degree", "basis"}], "radical_basis"}
// Coefficients are integers mod p when k = 1 and digit arrays of length k
// (constant term first) otherwise. Throws Error(kMalformedSpec) with the JSON
// pointer of the offending value; validation errors come from validate_algebra.
AlgebraSpec parse_algebra_spec(const std::string& text);
AlgebraSpec load_algebra_spec(const std::filesystem::path& path);

// Parses and validates in one step.
Algebra load_algebra(const std::filesystem::path& path);

std::string dump_algebra_spec(const AlgebraSpec& spec);

}  // namespace supchar

#endif  // SUPCHAR_ALGEBRA_JSON_HPP_
