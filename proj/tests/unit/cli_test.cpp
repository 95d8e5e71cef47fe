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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <algorithm>
#include <sstream>

#include "cli.hpp"
#include "test_support.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "supchar");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = supchar::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("supchar_cli_test_" + name);
}

std::string spec(const std::string& name) { return testsupport::spec_file(name).string(); }
std::string data(const std::string& name) { return testsupport::data_file(name).string(); }

TEST(Cli, TableBothT22) {
  const auto out = temp_path("t22.csv");
  const auto r = run({"table", "--n", "2", "--p", "2", "--mode", "both", "--format", "csv", "--out", out.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto text = slurp(out);
  EXPECT_NE(text.find("\"c=[0,0];D={}\",1,1\r\n"), std::string::npos);
  EXPECT_NE(text.find("\"c=[0,0];D={(1,2)}\",1,-1\r\n"), std::string::npos);
  EXPECT_NE(r.out.find("CHECK oracle PASS"), std::string::npos);
}

TEST(Cli, TableClosedT33HasFifteenRows) {
  const auto r = run({"table", "--n", "3", "--p", "3", "--mode", "closed"});
  EXPECT_EQ(r.code, 0) << r.err;
  std::size_t lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  EXPECT_EQ(lines, 2u + 15u);  // labels, sizes, 15 rows
}

TEST(Cli, TableJson) {
  const auto r = run({"table", "--n", "2", "--p", "3", "--mode", "brute", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"group_order\""), std::string::npos);
}

TEST(Cli, BoundExceeded) {
  EXPECT_EQ(run({"table", "--n", "9", "--p", "3", "--mode", "brute"}).code, 3);
  EXPECT_EQ(run({"table", "--n", "3", "--p", "3", "--mode", "brute", "--bound", "100"}).code, 3);
}

TEST(Cli, EnvironmentBound) {
  ::setenv("SUPCHAR_BOUND", "50", 1);
  const auto limited = run({"table", "--n", "3", "--p", "3", "--mode", "brute"});
  ::setenv("SUPCHAR_BOUND", "bogus", 1);
  const auto bogus = run({"table", "--n", "2", "--p", "2", "--mode", "brute"});
  ::unsetenv("SUPCHAR_BOUND");
  EXPECT_EQ(limited.code, 3);
  EXPECT_EQ(bogus.code, 2);
  EXPECT_NE(bogus.err.find("SUPCHAR_BOUND"), std::string::npos);
}

TEST(Cli, InvalidConfig) {
  EXPECT_EQ(run({"table", "--n", "1", "--p", "2"}).code, 2);
  EXPECT_EQ(run({"table", "--n", "2", "--p", "4"}).code, 2);
  EXPECT_EQ(run({"table", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"table", "--n", "2", "--p", "2", "--mode", "fast"}).code, 2);
  EXPECT_EQ(run({"verify", "--n", "2", "--p", "2", "--checks", "nonsense"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  const auto r = run({"table", "--n", "2", "--p", "4"});
  EXPECT_NE(r.err.find("--p"), std::string::npos) << r.err;
}

TEST(Cli, VerifyAll) {
  const auto r = run({"verify", "--n", "2", "--p", "3", "--checks", "all"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("CHECK S1 PASS 5 = 5"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyCounts) {
  const auto r = run({"verify", "--n", "3", "--p", "2", "--checks", "counts"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("predicted 5 = partition 5"), std::string::npos);
}

TEST(Cli, VerifyPerturbedAxiomsFail) {
  const auto r = run({"verify", "--n", "2", "--p", "2", "--checks", "axioms", "--perturb"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyLiteralExponentFailsOracleOnT33) {
  const auto r = run({"verify", "--n", "3", "--p", "3", "--checks", "oracle", "--exponent", "literal"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("CHECK oracle FAIL"), std::string::npos);
  EXPECT_EQ(run({"verify", "--n", "3", "--p", "3", "--checks", "oracle"}).code, 0);
}

TEST(Cli, VerifyOracleNeedsTriangular) {
  EXPECT_EQ(run({"verify", "--spec", spec("kronecker_gf3.json"), "--checks", "oracle"}).code, 2);
  EXPECT_EQ(run({"verify", "--spec", spec("kronecker_gf3.json"), "--checks", "all"}).code, 0);
}

TEST(Cli, Orbits) {
  const auto r = run({"orbits", "--n", "2", "--p", "2"});
  EXPECT_EQ(r.code, 0);
  for (const char* s : {"n(J)=2\n", "n_E(J)=1\n", "n(J*)=2\n", "n_E(J*)=1\n", "residual(J)=0\n"})
    EXPECT_NE(r.out.find(s), std::string::npos) << s;
}

TEST(Cli, OrbitsDualMatchesPrimal) {
  const auto primal = run({"orbits", "--n", "3", "--p", "2", "--space", "primal"});
  const auto dual = run({"orbits", "--n", "3", "--p", "2", "--space", "dual"});
  auto value_of = [](const std::string& text, const std::string& key) {
    const auto at = text.find(key);
    return text.substr(at + key.size(), text.find('\n', at) - at - key.size());
  };
  EXPECT_EQ(value_of(primal.out, "n_E(J)="), value_of(dual.out, "n_E(J*)="));
  EXPECT_EQ(dual.out.find("space J\n"), std::string::npos);
}

TEST(Cli, OrbitsBadSpecNamesPath) {
  const auto r = run({"orbits", "--spec", data("malformed_index.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("/mul/1/2/0/0"), std::string::npos) << r.err;
}

TEST(Cli, AlgebraCommand) {
  const auto r = run({"algebra", "--spec", spec("dual_numbers_gf3.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("group order 6"), std::string::npos);
  EXPECT_EQ(r.err.find("FAIL"), std::string::npos);
  const auto bad = run({"algebra", "--spec", data("noncommutative_s.json")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("SNotCommutative"), std::string::npos);
  EXPECT_EQ(run({"algebra", "--spec", spec("dual_numbers_gf3.json"), "--perturb"}).code, 1);
}

// Splits a CSV table into cells; the leading label column is dropped.
std::vector<std::vector<std::string>> cells(const std::string& csv) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> row;
    std::string cell;
    bool quoted = false;
    for (char ch : line) {
      if (ch == '"') quoted = !quoted;
      else if (ch == ',' && !quoted) {
        row.push_back(cell);
        cell.clear();
      } else {
        cell += ch;
      }
    }
    row.push_back(cell);
    row.erase(row.begin());
    rows.push_back(row);
  }
  return rows;
}

TEST(Cli, AlgebraT23MatchesTable) {
  const auto from_spec = run({"algebra", "--spec", spec("t23.json"), "--format", "csv"});
  const auto tri = run({"table", "--n", "2", "--p", "3", "--mode", "brute"});
  ASSERT_EQ(from_spec.code, 0);
  ASSERT_EQ(tri.code, 0);
  // Same table up to relabelling: some column permutation maps the sizes and
  // the multiset of rows onto each other.
  const auto a = cells(from_spec.out), b = cells(tri.out);
  ASSERT_EQ(a.size(), b.size());
  const std::size_t cols = a[1].size();
  std::vector<std::size_t> perm(cols);
  std::iota(perm.begin(), perm.end(), 0);
  bool found = false;
  do {
    auto permuted = [&](const std::vector<std::string>& row) {
      std::vector<std::string> out;
      for (auto c : perm) out.push_back(row[c]);
      return out;
    };
    if (permuted(a[1]) != b[1]) continue;
    std::vector<std::vector<std::string>> ra, rb(b.begin() + 2, b.end());
    for (std::size_t r = 2; r < a.size(); ++r) ra.push_back(permuted(a[r]));
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    found = ra == rb;
  } while (!found && std::next_permutation(perm.begin(), perm.end()));
  EXPECT_TRUE(found);
}

TEST(Cli, DeterministicAcrossJobs) {
  const auto a = temp_path("det1.csv"), b = temp_path("det4.csv");
  ASSERT_EQ(run({"table", "--n", "3", "--p", "3", "--mode", "both", "--jobs", "1", "--out", a.string()}).code, 0);
  ASSERT_EQ(run({"table", "--n", "3", "--p", "3", "--mode", "both", "--jobs", "4", "--out", b.string()}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST(Cli, Help) { EXPECT_EQ(run({"--help"}).code, 0); }

}  // namespace
