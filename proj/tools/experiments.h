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

// The experiment subcommands.  Each returns its main table, any secondary
// tables and the claims it checks; nothing here touches the filesystem.

#ifndef HILBERT_TEICH_TOOLS_EXPERIMENTS_H_
#define HILBERT_TEICH_TOOLS_EXPERIMENTS_H_

#include <string>

#include "experiment_config.h"
#include "output.h"

namespace hilbert_teich::tools {

// Birkhoff, Yamada and cross-ratio distances on 1000 random cones.
ExperimentResult RunAxioms(const ExperimentConfig& config);
// Earthquake ray trajectory with the almost-geodesic defect.
ExperimentResult RunRay(const ExperimentConfig& config);
// Length-defect and derivative bounds along earthquake sweeps.
ExperimentResult RunBounds(const ExperimentConfig& config);
// Diagonal-flip bounds on random quadrilaterals and the comparison of the
// metrics of a triangulation and its flip.
ExperimentResult RunFlip(const ExperimentConfig& config);
// Radial comparison d(X0, X) - 1/2 log sup l(X) along earthquake sweeps.
ExperimentResult RunRadial(const ExperimentConfig& config);
// Dehn-twist distortion, orbit distances and a non-isometry witness.
ExperimentResult RunMcg(const ExperimentConfig& config);

// Dispatches on config.command; throws InvalidInputError for unknown names.
ExperimentResult RunExperiment(const ExperimentConfig& config);

}  // namespace hilbert_teich::tools

#endif  // HILBERT_TEICH_TOOLS_EXPERIMENTS_H_
