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

#ifndef SUPCHAR_CHARACTER_TABLE_HPP_
#define SUPCHAR_CHARACTER_TABLE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "supchar/cyclotomic.hpp"

namespace supchar {

struct CharacterTable {
  std::uint32_t order = 1;  // cyclotomic order m of every value
  std::uint64_t group_order = 0;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::uint64_t> sizes;
  std::vector<std::vector<CycloNumber>> values;  // rows x cols
  std::size_t identity_col = 0;
};

// Row 1: "label" and the superclass labels; row 2: "size" and the sizes;
// then one row per supercharacter. Fields are quoted per RFC 4180.
std::string to_csv(const CharacterTable& table);
// Same content with exact coefficient arrays ("num/den" strings).
std::string to_json(const CharacterTable& table);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;

  // "CHECK <name> PASS|FAIL <details>"
  std::string line() const;
};

// Facts established while the table was built.
struct TableEvidence {
  bool constancy_checked = false;
  std::uint64_t elements_checked = 0;
  bool conjugacy_checked = false;
  bool conjugacy_refines = false;
  std::size_t conjugacy_class_count = 0;
};

struct RegularExpansion {
  std::vector<Rational> coefficients;  // one per row
  bool positive = false;
  bool reconstructs = false;
};

// Coefficients a with sum_a a chi_a = regular character, from
// a = chi(1) / <chi, chi>, then checked by rebuilding the regular character.
RegularExpansion regular_expansion(const CharacterTable& table);

CycloNumber table_inner_product(const CharacterTable& table, std::size_t r1, std::size_t r2);

// S1, S2, S3, principal, disjoint, conjugacy, regular, degrees.
std::vector<CheckResult> axioms_report(const CharacterTable& table, const TableEvidence& evidence);

// Entrywise exact comparison; empty when the tables agree (labels included).
std::vector<std::string> compare_tables(const CharacterTable& a, const CharacterTable& b,
                                        std::size_t max_reports = 20);

}  // namespace supchar

#endif  // SUPCHAR_CHARACTER_TABLE_HPP_
