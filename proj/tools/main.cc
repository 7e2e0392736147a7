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

// hilbert-teich: runs one experiment and writes its table(s) plus a JSON
// summary.  Exit status: 0 all claims pass, 1 some claim fails, 2 invalid
// configuration, 3 contract violation inside the library.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "experiment_config.h"
#include "experiments.h"
#include "hilbert_teich/errors.h"
#include "output.h"

namespace {

using hilbert_teich::tools::ExperimentConfig;
using hilbert_teich::tools::ExperimentResult;

// Raw flag values; only those given on the command line override the
// config file.
struct Flags {
  double rho0 = 2.0;
  std::string slope;
  double weight = 1.0;
  double t_max = 200;
  int steps = 64;
  uint64_t seed = 1;
  std::string out;
  std::string format = "csv";
  int arc = 0;
  std::string config;
};

void AddFlags(CLI::App* sub, Flags* f) {
  sub->add_option("--rho0", f->rho0, "truncation height (default 2)");
  sub->add_option("--slope", f->slope, "curve slope p/q");
  sub->add_option("--weight", f->weight, "curve weight");
  sub->add_option("--tmax", f->t_max, "largest earthquake amplitude");
  sub->add_option("--steps", f->steps, "grid points (>= 2)");
  sub->add_option("--seed", f->seed, "random seed");
  sub->add_option("--out", f->out, "output table path");
  sub->add_option("--format", f->format, "csv or json");
  sub->add_option("--arc", f->arc, "arc flipped by `flip` (0, 1, 2)");
  sub->add_option("--config", f->config, "JSON file with the same fields");
}

ExperimentConfig BuildConfig(const CLI::App& sub, const Flags& f) {
  ExperimentConfig c;
  c.command = sub.get_name();
  if (sub.count("--config") > 0) {
    std::ifstream in(f.config);
    if (!in) {
      throw hilbert_teich::InvalidInputError("cannot read config " + f.config);
    }
    const std::string text((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    hilbert_teich::tools::MergeJsonConfig(text, &c);
  }
  if (sub.count("--rho0") > 0) c.rho0 = f.rho0;
  if (sub.count("--slope") > 0) c.slope = hilbert_teich::tools::ParseSlope(f.slope);
  if (sub.count("--weight") > 0) c.weight = f.weight;
  if (sub.count("--tmax") > 0) c.t_max = f.t_max;
  if (sub.count("--steps") > 0) c.steps = f.steps;
  if (sub.count("--seed") > 0) c.seed = f.seed;
  if (sub.count("--out") > 0) c.out = f.out;
  if (sub.count("--format") > 0) c.format = f.format;
  if (sub.count("--arc") > 0) c.arc = f.arc;
  if (c.out.empty()) c.out = c.command + "." + c.format;
  return c;
}

void WriteTable(const hilbert_teich::tools::Table& table,
                const std::string& format, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hilbert_teich::InvalidInputError("cannot write " + path.string());
  if (format == "json") {
    hilbert_teich::tools::WriteJson(table, out);
  } else {
    hilbert_teich::tools::WriteCsv(table, out);
  }
}

// <stem><suffix> next to the main output.
std::filesystem::path Sibling(const std::filesystem::path& out,
                              const std::string& suffix) {
  std::filesystem::path p = out;
  p.replace_extension();
  p += suffix;
  return p;
}

void WriteOutputs(const ExperimentConfig& c, const ExperimentResult& r) {
  const std::filesystem::path out(c.out);
  WriteTable(r.table, c.format, out);
  for (const auto& [name, table] : r.extra_tables) {
    WriteTable(table, c.format, Sibling(out, "." + name + "." + c.format));
  }
  std::ofstream summary(Sibling(out, ".summary.json"), std::ios::binary);
  hilbert_teich::tools::WriteSummary(c.command, r, summary);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert metric experiments on the once-punctured torus"};
  app.require_subcommand(1);
  Flags flags;
  const std::vector<std::pair<const char*, const char*>> commands = {
      {"axioms", "cone metric properties on random cones"},
      {"ray", "earthquake ray trajectory and almost-geodesic defect"},
      {"bounds", "length-defect and derivative bounds"},
      {"flip", "diagonal-flip bounds and flipped-metric comparison"},
      {"radial", "radial comparison with 1/2 log sup l"},
      {"mcg", "Dehn-twist distortion, orbits, non-isometry witness"}};
  for (const auto& [name, help] : commands) AddFlags(app.add_subcommand(name, help), &flags);
  CLI11_PARSE(app, argc, argv);

  const CLI::App* sub = app.get_subcommands().front();
  ExperimentConfig config;
  ExperimentResult result;
  try {
    config = BuildConfig(*sub, flags);
    result = hilbert_teich::tools::RunExperiment(config);
    WriteOutputs(config, result);
  } catch (const hilbert_teich::InvalidInputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const hilbert_teich::InvariantViolation& e) {
    std::fprintf(stderr, "contract violation: %s (record %d)\n", e.what(),
                 e.index());
    return 3;
  } catch (const hilbert_teich::Error& e) {
    std::fprintf(stderr, "contract violation: %s\n", e.what());
    return 3;
  }
  for (const hilbert_teich::tools::Claim& c : result.claims) {
    std::printf("[%s] %s: %.6g (bound %.6g)\n", c.pass() ? "PASS" : "FAIL",
                c.claim.c_str(), c.worst_observed, c.bound);
  }
  return result.pass() ? 0 : 1;
}
