// Copyright 2026 The galsieve Authors.
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

#ifndef GALSIEVE_TOOLS_CLI_HPP_
#define GALSIEVE_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace galsieve::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kDataError = 2 };

// Tabular result: comment lines, a header row and string cells.
struct Table {
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(const Table& t, std::ostream& out);
void write_json(const Table& t, std::ostream& out);

// Entry point shared by the binary and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SelftestOptions {
  unsigned long long seed = 0;
  std::string inject;  // name of a deliberately broken constant, for mutation checks
};
// Runs every invariant suite and prints per-suite pass counts. Returns 0
// when all pass, otherwise 1 after naming each failed invariant.
int selftest(const SelftestOptions& opts, std::ostream& out);

}  // namespace galsieve::cli

#endif  // GALSIEVE_TOOLS_CLI_HPP_
