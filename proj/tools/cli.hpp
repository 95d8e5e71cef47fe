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

#ifndef SUPCHAR_TOOLS_CLI_HPP_
#define SUPCHAR_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace supchar::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInvalidConfig = 2,
  kBoundExceeded = 3,
};

struct RunConfig {
  std::string command;
  std::uint32_t n = 0;
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::string mode = "both";
  std::vector<std::string> checks{"all"};
  std::string spec;
  std::string out;
  std::string diff;
  std::string format = "csv";
  std::string space = "both";
  unsigned jobs = 1;
  std::uint64_t group_bound = 0;  // 0 means default or SUPCHAR_BOUND
  std::uint64_t space_bound = 0;
  std::string exponent = "path";  // torus exponent of the closed form: path or literal
  bool perturb = false;  // test hook: corrupts one table cell before the axioms run
};

// Parses argv and runs the chosen command. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_table(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_orbits(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_algebra(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace supchar::cli

#endif  // SUPCHAR_TOOLS_CLI_HPP_
