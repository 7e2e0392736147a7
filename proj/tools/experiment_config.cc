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

#include "experiment_config.h"

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "hilbert_teich/errors.h"

namespace hilbert_teich::tools {

void Validate(const ExperimentConfig& config) {
  if (!(config.rho0 > 0) || !std::isfinite(config.rho0)) {
    throw InvalidInputError("rho0 must be positive");
  }
  if (!(config.t_max > 0) || !std::isfinite(config.t_max)) {
    throw InvalidInputError("tmax must be positive");
  }
  if (config.steps < 2) throw InvalidInputError("steps must be at least 2");
  if (config.weight && (!(*config.weight > 0) || !std::isfinite(*config.weight))) {
    throw InvalidInputError("weight must be positive");
  }
  if (config.format != "csv" && config.format != "json") {
    throw InvalidInputError("format must be csv or json");
  }
  if (config.arc < 0 || config.arc > 2) {
    throw InvalidInputError("arc must be 0, 1 or 2");
  }
}

Slope ParseSlope(std::string_view text) {
  std::optional<Slope> s = Slope::Parse(std::string(text));
  if (!s) throw InvalidInputError("bad slope '" + std::string(text) + "'");
  return *s;
}

void MergeJsonConfig(std::string_view text, ExperimentConfig* config) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw InvalidInputError("config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "rho0") {
        config->rho0 = value.get<double>();
      } else if (key == "slope") {
        config->slope = ParseSlope(value.get<std::string>());
      } else if (key == "weight") {
        config->weight = value.get<double>();
      } else if (key == "tmax") {
        config->t_max = value.get<double>();
      } else if (key == "steps") {
        config->steps = value.get<int>();
      } else if (key == "seed") {
        config->seed = value.get<uint64_t>();
      } else if (key == "out") {
        config->out = value.get<std::string>();
      } else if (key == "format") {
        config->format = value.get<std::string>();
      } else if (key == "arc") {
        config->arc = value.get<int>();
      } else {
        throw InvalidInputError("config: unknown key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(std::string("config: ") + e.what());
  }
}

}  // namespace hilbert_teich::tools
