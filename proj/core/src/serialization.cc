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

#include "hilbert_teich/serialization.h"

#include <cstdio>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hilbert_teich/errors.h"

namespace hilbert_teich {

namespace {

using nlohmann::json;

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("malformed JSON: ") + e.what());
  }
}

// Runs a reader and turns nlohmann type errors into InvalidInputError.
template <typename F>
auto Read(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("unexpected JSON shape: ") + e.what());
  }
}

std::string MatrixText(const Mobius& m) {
  return "[" + FormatDouble(m.a()) + ", " + FormatDouble(m.b()) + ", " +
         FormatDouble(m.c()) + ", " + FormatDouble(m.d()) + "]";
}

Mobius MatrixFrom(const json& j) {
  const auto e = j.get<std::vector<double>>();
  if (e.size() != 4) throw InvalidInputError("a matrix needs 4 entries");
  return Mobius::FromEntries(e[0], e[1], e[2], e[3]);
}

}  // namespace

std::string FormatDouble(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string TriangulationToJson(const PreferredTriangulation& gamma) {
  json j;
  j["g"] = gamma.genus();
  j["n"] = gamma.punctures();
  j["arcs"] = gamma.arcs();
  j["triangles"] = gamma.triangles();
  j["discs"] = gamma.discs();
  return j.dump();
}

PreferredTriangulation TriangulationFromJson(std::string_view text) {
  const json j = Parse(text);
  return Read([&] {
    return PreferredTriangulation::Create(
        j.at("g").get<int>(), j.at("n").get<int>(),
        j.at("arcs").get<std::vector<std::string>>(),
        j.at("triangles").get<std::vector<TriangleSides>>(),
        j.value("discs", std::vector<std::vector<int>>{}));
  });
}

// Written by hand so the entries keep all 17 digits.
std::string StructureToJson(const MarkedStructure& x) {
  return "{\"A\": " + MatrixText(x.a()) + ", \"B\": " + MatrixText(x.b()) +
         ", \"rho0\": " + FormatDouble(x.rho0()) + "}";
}

MarkedStructure StructureFromJson(std::string_view text) {
  const json j = Parse(text);
  return Read([&] {
    return MarkedStructure(MatrixFrom(j.at("A")), MatrixFrom(j.at("B")),
                           j.value("rho0", kDefaultRho0));
  });
}

std::string MulticurveToJson(const WeightedMulticurve& mu) {
  std::string out = "[";
  for (size_t k = 0; k < mu.components().size(); ++k) {
    const auto& c = mu.components()[k];
    if (k > 0) out += ", ";
    out += "{\"p\": " + std::to_string(c.slope.p()) +
           ", \"q\": " + std::to_string(c.slope.q()) +
           ", \"w\": " + FormatDouble(c.weight) + "}";
  }
  return out + "]";
}

WeightedMulticurve MulticurveFromJson(std::string_view text) {
  const json j = Parse(text);
  return Read([&] {
    if (!j.is_array()) throw InvalidInputError("multicurve must be a list");
    std::vector<WeightedMulticurve::Component> parts;
    for (const json& c : j) {
      parts.push_back({Slope(c.at("p").get<int64_t>(), c.at("q").get<int64_t>()),
                       c.at("w").get<double>()});
    }
    return WeightedMulticurve(std::move(parts));
  });
}

}  // namespace hilbert_teich
