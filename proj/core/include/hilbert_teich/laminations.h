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

#ifndef HILBERT_TEICH_LAMINATIONS_H_
#define HILBERT_TEICH_LAMINATIONS_H_

#include <vector>

#include "hilbert_teich/slope.h"
#include "hilbert_teich/triangulation.h"

namespace hilbert_teich {

// A weighted multicurve standing in for a measured lamination.
class WeightedMulticurve {
 public:
  struct Component {
    Slope slope;
    double weight;
  };

  // The empty multicurve.
  WeightedMulticurve() = default;
  // Repeated slopes are merged by adding weights.  Throws InvalidInputError
  // for a nonpositive weight or two components that intersect.
  explicit WeightedMulticurve(std::vector<Component> components);
  static WeightedMulticurve Single(const Slope& s, double weight = 1);

  const std::vector<Component>& components() const { return components_; }
  bool empty() const { return components_.empty(); }

 private:
  std::vector<Component> components_;
};

// (i(eta_1, mu), ..., i(eta_N, mu)) for the arcs of a slope-labelled
// triangulation.  Throws InternalError if the vector is not a boundary point
// of the lamination cone.
std::vector<double> IntersectionVector(const WeightedMulticurve& mu,
                                       const PreferredTriangulation& gamma);

}  // namespace hilbert_teich

#endif  // HILBERT_TEICH_LAMINATIONS_H_
