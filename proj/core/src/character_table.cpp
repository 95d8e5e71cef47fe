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

#include "supchar/character_table.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace supchar {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string rational_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace

std::string to_csv(const CharacterTable& table) {
  std::ostringstream os;
  os << "label";
  for (const auto& c : table.col_labels) os << ',' << csv_field(c);
  os << "\r\nsize";
  for (auto s : table.sizes) os << ',' << s;
  os << "\r\n";
  for (std::size_t r = 0; r < table.values.size(); ++r) {
    os << csv_field(table.row_labels[r]);
    for (const auto& v : table.values[r]) os << ',' << csv_field(v.to_string());
    os << "\r\n";
  }
  return os.str();
}

std::string to_json(const CharacterTable& table) {
  nlohmann::ordered_json doc;
  doc["m"] = table.order;
  doc["group_order"] = table.group_order;
  auto cols = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < table.col_labels.size(); ++c)
    cols.push_back({{"label", table.col_labels[c]}, {"size", table.sizes[c]}});
  doc["columns"] = cols;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < table.values.size(); ++r) {
    auto values = nlohmann::ordered_json::array();
    for (const auto& v : table.values[r]) {
      auto coeffs = nlohmann::ordered_json::array();
      for (const auto& c : v.coeffs()) coeffs.push_back(rational_string(c));
      values.push_back(coeffs);
    }
    rows.push_back({{"label", table.row_labels[r]}, {"values", values}});
  }
  doc["rows"] = rows;
  return doc.dump(2) + "\n";
}

std::string CheckResult::line() const {
  return "CHECK " + name + (pass ? " PASS" : " FAIL") + (details.empty() ? "" : " " + details);
}

CycloNumber table_inner_product(const CharacterTable& table, std::size_t r1, std::size_t r2) {
  CycloNumber acc = CycloNumber::zero(table.order);
  for (std::size_t c = 0; c < table.sizes.size(); ++c) {
    const auto& a = table.values[r1][c];
    const auto& b = table.values[r2][c];
    if (a.is_zero() || b.is_zero()) continue;
    acc += a * b.conj() * Rational(static_cast<std::int64_t>(table.sizes[c]));
  }
  return acc * Rational(1, static_cast<std::int64_t>(table.group_order));
}

RegularExpansion regular_expansion(const CharacterTable& table) {
  RegularExpansion out;
  out.positive = true;
  const std::size_t cols = table.sizes.size();
  std::vector<CycloNumber> rebuilt(cols, CycloNumber::zero(table.order));
  for (std::size_t r = 0; r < table.values.size(); ++r) {
    const auto norm = table_inner_product(table, r, r);
    const auto& degree = table.values[r][table.identity_col];
    Rational a = 0;
    if (norm.is_rational() && degree.is_rational() && norm.to_rational() != 0)
      a = degree.to_rational() / norm.to_rational();
    if (a <= 0) out.positive = false;
    out.coefficients.push_back(a);
    for (std::size_t c = 0; c < cols; ++c) rebuilt[c] += table.values[r][c] * a;
  }
  out.reconstructs = true;
  for (std::size_t c = 0; c < cols; ++c) {
    const auto expected = CycloNumber::from_rational(
        table.order, c == table.identity_col ? Rational(static_cast<std::int64_t>(table.group_order)) : Rational(0));
    if (!(rebuilt[c] == expected)) out.reconstructs = false;
  }
  return out;
}

std::vector<CheckResult> axioms_report(const CharacterTable& table, const TableEvidence& evidence) {
  std::vector<CheckResult> out;
  const auto rows = table.values.size();
  const auto cols = table.sizes.size();
  out.push_back({"S1", rows == cols, std::to_string(rows) + " = " + std::to_string(cols)});

  out.push_back({"S2", evidence.constancy_checked,
                 evidence.constancy_checked
                     ? "constant on superclasses over " + std::to_string(evidence.elements_checked) + " elements"
                     : "not checked"});

  const bool s3 = cols > 0 && table.sizes[table.identity_col] == 1;
  out.push_back({"S3", s3, "{1} has size " + (cols ? std::to_string(table.sizes[table.identity_col]) : "-")});

  bool principal = false;
  for (std::size_t r = 0; r < rows && !principal; ++r) {
    principal = true;
    for (const auto& v : table.values[r]) principal = principal && v == CycloNumber::one(table.order);
  }
  out.push_back({"principal", principal, principal ? "all-ones row present" : "no all-ones row"});

  std::size_t bad = 0, pairs = 0;
  std::string first_bad;
  for (std::size_t a = 0; a < rows; ++a)
    for (std::size_t b = a + 1; b < rows; ++b) {
      ++pairs;
      if (!table_inner_product(table, a, b).is_zero()) {
        if (bad++ == 0) first_bad = " first " + table.row_labels[a] + " | " + table.row_labels[b];
      }
    }
  out.push_back({"disjoint", bad == 0, std::to_string(pairs - bad) + "/" + std::to_string(pairs) +
                                           " off-diagonal inner products vanish" + first_bad});

  out.push_back({"conjugacy", evidence.conjugacy_checked && evidence.conjugacy_refines,
                 evidence.conjugacy_checked
                     ? std::to_string(evidence.conjugacy_class_count) + " conjugacy classes" +
                           (evidence.conjugacy_refines ? " refine " : " do not refine ") + std::to_string(cols) +
                           " superclasses"
                     : "not checked"});

  const auto reg = regular_expansion(table);
  std::ostringstream os;
  os << "coefficients (";
  for (std::size_t r = 0; r < reg.coefficients.size(); ++r) os << (r ? "," : "") << reg.coefficients[r];
  os << ")" << (reg.reconstructs ? " rebuild" : " do not rebuild") << " the regular character";
  out.push_back({"regular", reg.positive && reg.reconstructs, os.str()});

  bool degrees = true;
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& d = table.values[r][table.identity_col];
    degrees = degrees && d.is_rational() && d.to_rational() > 0 &&
              boost::multiprecision::denominator(d.to_rational()) == 1;
  }
  out.push_back({"degrees", degrees, degrees ? "identity column holds positive integers" : "bad degree"});
  return out;
}

std::vector<std::string> compare_tables(const CharacterTable& a, const CharacterTable& b, std::size_t max_reports) {
  std::vector<std::string> out;
  if (a.row_labels != b.row_labels) out.push_back("row labels differ");
  if (a.col_labels != b.col_labels) out.push_back("column labels differ");
  if (a.sizes != b.sizes) out.push_back("superclass sizes differ");
  if (a.order != b.order) out.push_back("cyclotomic orders differ");
  if (!out.empty()) return out;
  for (std::size_t r = 0; r < a.values.size(); ++r)
    for (std::size_t c = 0; c < a.sizes.size(); ++c)
      if (!(a.values[r][c] == b.values[r][c])) {
        if (out.size() < max_reports)
          out.push_back("[" + a.row_labels[r] + "][" + a.col_labels[c] + "]: " + a.values[r][c].to_string() +
                        " vs " + b.values[r][c].to_string());
        else
          return out;
      }
  return out;
}

}  // namespace supchar
