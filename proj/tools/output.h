// Copyright 2026 The hilbert-teich Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Tables and pass/fail summaries written by the experiments.

#ifndef HILBERT_TEICH_TOOLS_OUTPUT_H_
#define HILBERT_TEICH_TOOLS_OUTPUT_H_

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hilbert_teich::tools {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Header line, then one line per row with %.17g fields.
void WriteCsv(const Table& table, std::ostream& out);
// An array of {column: value} objects; non-finite values become null.
void WriteJson(const Table& table, std::ostream& out);

struct Claim {
  std::string claim;
  double bound;
  double worst_observed;
  double tolerance = 0;
  bool pass() const { return worst_observed <= bound + tolerance; }
};

struct ExperimentResult {
  Table table;
  // Secondary tables, written next to the main one as <stem>.<name>.<ext>.
  std::vector<std::pair<std::string, Table>> extra_tables;
  std::vector<Claim> claims;
  bool pass() const;
};

// {"command", "pass", "claims": [{claim, bound, worst_observed, tolerance,
// pass}]}.
void WriteSummary(const std::string& command, const ExperimentResult& result,
                  std::ostream& out);

}  // namespace hilbert_teich::tools

#endif  // HILBERT_TEICH_TOOLS_OUTPUT_H_
