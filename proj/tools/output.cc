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

#include "output.h"

#include <cmath>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace hilbert_teich::tools {

namespace {

nlohmann::ordered_json Number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

void WriteCsv(const Table& table, std::ostream& out) {
  std::string line;
  for (size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) line += ',';
    line += table.columns[c];
  }
  out << line << '\n';
  for (const std::vector<double>& row : table.rows) {
    line.clear();
    for (size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += ',';
      line += fmt::format("{:.17g}", row[c]);
    }
    out << line << '\n';
  }
}

void WriteJson(const Table& table, std::ostream& out) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const std::vector<double>& row : table.rows) {
    nlohmann::ordered_json r;
    for (size_t c = 0; c < row.size(); ++c) r[table.columns[c]] = Number(row[c]);
    rows.push_back(std::move(r));
  }
  out << rows.dump(1) << '\n';
}

bool ExperimentResult::pass() const {
  for (const Claim& c : claims) {
    if (!c.pass()) return false;
  }
  return true;
}

void WriteSummary(const std::string& command, const ExperimentResult& result,
                  std::ostream& out) {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["pass"] = result.pass();
  j["claims"] = nlohmann::ordered_json::array();
  for (const Claim& c : result.claims) {
    j["claims"].push_back({{"claim", c.claim},
                           {"bound", Number(c.bound)},
                           {"worst_observed", Number(c.worst_observed)},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass()}});
  }
  out << j.dump(2) << '\n';
}

}  // namespace hilbert_teich::tools
