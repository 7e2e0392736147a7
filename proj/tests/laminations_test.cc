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

#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "hilbert_teich/decorated_surface.h"
#include "hilbert_teich/errors.h"
#include "oracles.h"

namespace hilbert_teich {
namespace {

using Vec = std::vector<double>;

TEST(WeightedMulticurve, Construction) {
  EXPECT_TRUE(WeightedMulticurve().empty());
  const WeightedMulticurve mu({{Slope(1, 0), 1}, {Slope(1, 0), 0.5}});
  ASSERT_EQ(mu.components().size(), 1u);
  EXPECT_EQ(mu.components()[0].weight, 1.5);
  EXPECT_THROW(WeightedMulticurve({{Slope(1, 0), 1}, {Slope(0, 1), 1}}),
               InvalidInputError);
  EXPECT_THROW(WeightedMulticurve::Single(Slope(1, 0), 0), InvalidInputError);
  EXPECT_THROW(WeightedMulticurve::Single(Slope(1, 0), -2), InvalidInputError);
}

TEST(IntersectionVector, BaseTriangulation) {
  const PreferredTriangulation g = PreferredTriangulation::OncePuncturedTorus();
  const Vec i = IntersectionVector(WeightedMulticurve::Single(Slope(1, 0)), g);
  EXPECT_EQ(i, (Vec{0, 1, 1}));
  // The same numbers from the crossing-count oracle.
  EXPECT_EQ(oracle::CrossingCount(1, 0, 0, 1), 1);
  EXPECT_EQ(oracle::CrossingCount(1, 0, 1, 1), 1);
  const Vec scaled =
      IntersectionVector(WeightedMulticurve::Single(Slope(1, 0), 2.5), g);
  EXPECT_EQ(scaled, (Vec{0, 2.5, 2.5}));
  EXPECT_EQ(IntersectionVector(WeightedMulticurve(), g), (Vec{0, 0, 0}));
}

TEST(IntersectionVector, AlwaysOnTheConeBoundary) {
  const PreferredTriangulation g = PreferredTriangulation::OncePuncturedTorus();
  const ConeFunctionalSet cone = ConeOfLaminations(g);
  for (int p = -6; p <= 6; ++p) {
    for (int q = 0; q <= 6; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const Slope s(p, q);
      const Vec i = IntersectionVector(WeightedMulticurve::Single(s, 1.3), g);
      EXPECT_TRUE(Contains(cone, i));
      EXPECT_TRUE(OnLaminationBoundary(g, i));
      const std::vector<Slope> arcs = ArcSlopes(g);
      for (int e = 0; e < 3; ++e) {
        EXPECT_DOUBLE_EQ(i[e], 1.3 * oracle::CrossingCount(
                                         p, q, arcs[e].p(), arcs[e].q()));
      }
    }
  }
}

TEST(IntersectionVector, LengthVectorsAreInterior) {
  const PreferredTriangulation g = PreferredTriangulation::OncePuncturedTorus();
  const TruncatedLengthVector v =
      LengthVector(MarkedStructure::ModularTorus(), g);
  EXPECT_TRUE(Contains(ConeOfLaminations(g), v.lengths()));
  EXPECT_FALSE(OnLaminationBoundary(g, v.lengths()));
}

}  // namespace
}  // namespace hilbert_teich
