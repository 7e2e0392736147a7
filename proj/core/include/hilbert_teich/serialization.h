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

// JSON forms of triangulations, marked structures and multicurves.  Arc and
// triangle indices are 0-based.  Floats are written with 17 significant
// digits so they round-trip exactly.
//
//   triangulation: {"g": 1, "n": 1, "arcs": [...], "triangles": [[0, 1, 2]],
//                   "discs": [[0]]}
//   structure:     {"A": [a, b, c, d], "B": [a, b, c, d], "rho0": 2}
//   multicurve:    [{"p": 1, "q": 0, "w": 1.5}]

#ifndef HILBERT_TEICH_SERIALIZATION_H_
#define HILBERT_TEICH_SERIALIZATION_H_

#include <string>
#include <string_view>

#include "hilbert_teich/decorated_surface.h"
#include "hilbert_teich/laminations.h"
#include "hilbert_teich/triangulation.h"

namespace hilbert_teich {

// The parsers throw InvalidInputError on malformed text or invalid content.
std::string TriangulationToJson(const PreferredTriangulation& gamma);
PreferredTriangulation TriangulationFromJson(std::string_view text);

std::string StructureToJson(const MarkedStructure& x);
MarkedStructure StructureFromJson(std::string_view text);

std::string MulticurveToJson(const WeightedMulticurve& mu);
WeightedMulticurve MulticurveFromJson(std::string_view text);

// printf("%.17g").
std::string FormatDouble(double x);

}  // namespace hilbert_teich

#endif  // HILBERT_TEICH_SERIALIZATION_H_
