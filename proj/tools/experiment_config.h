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

// Configuration shared by every experiment subcommand.

#ifndef HILBERT_TEICH_TOOLS_EXPERIMENT_CONFIG_H_
#define HILBERT_TEICH_TOOLS_EXPERIMENT_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hilbert_teich/slope.h"

namespace hilbert_teich::tools {

struct ExperimentConfig {
  std::string command;
  double rho0 = 2.0;
  // Unset slope / weight means the default sweep of the subcommand.
  std::optional<Slope> slope;
  std::optional<double> weight;
  double t_max = 200;
  int steps = 64;
  uint64_t seed = 1;
  std::string out;  // empty: <command>.<format> in the working directory
  std::string format = "csv";
  int arc = 0;  // arc of the base triangulation flipped by `flip`
};

// Throws InvalidInputError naming the offending field.
void Validate(const ExperimentConfig& config);

// Overwrites the fields present in a JSON object whose keys are the long
// flag names (rho0, slope, weight, tmax, steps, seed, out, format, arc).
// Unknown keys and ill-typed values throw InvalidInputError.
void MergeJsonConfig(std::string_view text, ExperimentConfig* config);

// "p/q" -> slope; throws InvalidInputError.
Slope ParseSlope(std::string_view text);

}  // namespace hilbert_teich::tools

#endif  // HILBERT_TEICH_TOOLS_EXPERIMENT_CONFIG_H_
