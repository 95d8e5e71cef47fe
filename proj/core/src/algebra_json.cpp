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

#include "supchar/algebra_json.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "supchar/error.hpp"

namespace supchar {
namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& msg, const std::string& path) {
  throw Error(ErrorCode::kMalformedSpec, msg, path);
}

const json& member(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) malformed(std::string("missing field \"") + key + "\"", path + "/" + key);
  return *it;
}

std::uint32_t to_index(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) malformed("expected a nonnegative integer", path);
  const auto x = v.get<std::int64_t>();
  if (x > (std::int64_t{1} << 31)) malformed("integer too large", path);
  return static_cast<std::uint32_t>(x);
}

const json& to_array(const json& v, const std::string& path) {
  if (!v.is_array()) malformed("expected an array", path);
  return v;
}

FieldElement to_coeff(const GaloisField& f, const json& v, const std::string& path) {
  if (f.degree() == 1) {
    if (!v.is_number_integer()) malformed("expected an integer coefficient", path);
    return f.from_int(v.get<std::int64_t>());
  }
  if (!v.is_array() || v.size() != f.degree())
    malformed("expected a coefficient array of length " + std::to_string(f.degree()), path);
  std::vector<std::uint32_t> digits;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    if (!v[i].is_number_integer()) malformed("expected an integer digit", p);
    const auto d = v[i].get<std::int64_t>();
    const auto m = static_cast<std::int64_t>(f.characteristic());
    digits.push_back(static_cast<std::uint32_t>(((d % m) + m) % m));
  }
  return f.from_digits(digits);
}

Vector to_vector(const GaloisField& f, const json& v, const std::string& path) {
  to_array(v, path);
  Vector out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(to_coeff(f, v[i], path + "/" + std::to_string(i)));
  return out;
}

std::vector<std::uint32_t> to_indices(const json& v, const std::string& path) {
  to_array(v, path);
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(to_index(v[i], path + "/" + std::to_string(i)));
  return out;
}

json coeff_json(const GaloisField& f, FieldElement c) {
  if (f.degree() == 1) return c.value;
  return f.digits(c);
}

json vector_json(const GaloisField& f, const Vector& v) {
  json out = json::array();
  for (auto c : v) out.push_back(coeff_json(f, c));
  return out;
}

}  // namespace

AlgebraSpec parse_algebra_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what(), "");
  }
  if (!doc.is_object()) malformed("expected an object", "");
  AlgebraSpec spec;
  const auto p = to_index(member(doc, "p", ""), "/p");
  const auto k = doc.contains("k") ? to_index(doc["k"], "/k") : 1u;
  try {
    spec.field = field_make(p, k);
  } catch (Error& e) {
    throw Error(e.code(), e.detail(), e.code() == ErrorCode::kNotPrime ? "/p" : "/k");
  }
  const auto& f = *spec.field;
  spec.dim = to_index(member(doc, "dim", ""), "/dim");
  spec.unit = to_vector(f, member(doc, "unit", ""), "/unit");
  const auto& mul = to_array(member(doc, "mul", ""), "/mul");
  for (std::size_t r = 0; r < mul.size(); ++r) {
    const std::string path = "/mul/" + std::to_string(r);
    const auto& e = mul[r];
    if (!e.is_array() || e.size() != 3) malformed("expected [i, j, [[l, c], ...]]", path);
    StructureEntry entry;
    entry.left = to_index(e[0], path + "/0");
    entry.right = to_index(e[1], path + "/1");
    const auto& terms = to_array(e[2], path + "/2");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tp = path + "/2/" + std::to_string(t);
      if (!terms[t].is_array() || terms[t].size() != 2) malformed("expected [l, c]", tp);
      entry.terms.push_back({to_index(terms[t][0], tp + "/0"), to_coeff(f, terms[t][1], tp + "/1")});
    }
    spec.mul.push_back(std::move(entry));
  }
  const auto& blocks = to_array(member(doc, "blocks", ""), "/blocks");
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::string path = "/blocks/" + std::to_string(b);
    if (!blocks[b].is_object()) malformed("expected an object", path);
    BlockSpec blk;
    blk.idempotent = to_vector(f, member(blocks[b], "idempotent", path), path + "/idempotent");
    blk.degree = blocks[b].contains("degree") ? to_index(blocks[b]["degree"], path + "/degree") : 1u;
    blk.basis = to_indices(member(blocks[b], "basis", path), path + "/basis");
    spec.blocks.push_back(std::move(blk));
  }
  spec.radical_basis = to_indices(member(doc, "radical_basis", ""), "/radical_basis");
  return spec;
}

AlgebraSpec load_algebra_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path.string(), "");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra_spec(ss.str());
}

Algebra load_algebra(const std::filesystem::path& path) { return validate_algebra(load_algebra_spec(path)); }

std::string dump_algebra_spec(const AlgebraSpec& spec) {
  const auto& f = *spec.field;
  json doc;
  doc["p"] = f.characteristic();
  doc["k"] = f.degree();
  doc["dim"] = spec.dim;
  doc["unit"] = vector_json(f, spec.unit);
  json mul = json::array();
  for (const auto& e : spec.mul) {
    json terms = json::array();
    for (const auto& t : e.terms) terms.push_back(json::array({t.index, coeff_json(f, t.coeff)}));
    mul.push_back(json::array({e.left, e.right, terms}));
  }
  doc["mul"] = mul;
  json blocks = json::array();
  for (const auto& b : spec.blocks)
    blocks.push_back({{"idempotent", vector_json(f, b.idempotent)}, {"degree", b.degree}, {"basis", b.basis}});
  doc["blocks"] = blocks;
  doc["radical_basis"] = spec.radical_basis;
  return doc.dump(2) + "\n";
}

}  // namespace supchar
