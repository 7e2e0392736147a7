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

#include "hilbert_teich/laminations.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "hilbert_teich/decorated_surface.h"
#include "hilbert_teich/errors.h"

namespace hilbert_teich {

WeightedMulticurve::WeightedMulticurve(std::vector<Component> components) {
  for (const Component& c : components) {
    if (!(c.weight > 0) || !std::isfinite(c.weight)) {
      throw InvalidInputError("multicurve weights must be positive");
    }
    bool merged = false;
    for (Component& existing : components_) {
      if (existing.slope == c.slope) {
        existing.weight += c.weight;
        merged = true;
      } else if (IntersectionNumber(existing.slope, c.slope) != 0) {
        throw InvalidInputError("components " + existing.slope.ToString() +
                                " and " + c.slope.ToString() + " intersect");
      }
    }
    if (!merged) components_.push_back(c);
  }
}

WeightedMulticurve WeightedMulticurve::Single(const Slope& s, double weight) {
  return WeightedMulticurve({{s, weight}});
}

std::vector<double> IntersectionVector(const WeightedMulticurve& mu,
                                       const PreferredTriangulation& gamma) {
  const std::vector<Slope> arcs = ArcSlopes(gamma);
  std::vector<double> out(arcs.size(), 0.0);
  for (size_t e = 0; e < arcs.size(); ++e) {
    for (const auto& c : mu.components()) {
      out[e] += c.weight * static_cast<double>(
                               IntersectionNumber(c.slope, arcs[e]));
    }
  }
  const ConeFunctionalSet cone = ConeOfLaminations(gamma);
  double scale = 1;
  for (double a : out) scale = std::max(scale, a);
  for (size_t k = 0; k < cone.size(); ++k) {
    if (cone.Evaluate(k, out) < -1e-12 * scale) {
      throw InternalError("intersection vector leaves the lamination cone");
    }
  }
  if (!OnLaminationBoundary(gamma, out)) {
    throw InternalError("intersection vector is interior to the cone");
  }
  return out;
}

}  // namespace hilbert_teich
