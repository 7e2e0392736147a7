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

#include "hilbert_teich/teich_hilbert.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "hilbert_teich/earthquake.h"
#include "hilbert_teich/errors.h"
#include "hilbert_teich/random.h"

namespace hilbert_teich {
namespace {

using Vec = std::vector<double>;

const PreferredTriangulation& Torus() {
  static const PreferredTriangulation* g =
      new PreferredTriangulation(PreferredTriangulation::OncePuncturedTorus());
  return *g;
}

TEST(HilbertDistance, HandExample) {
  const double l = 7.5835;
  const TruncatedLengthVector v1(Torus(), {l, l, l}, 2);
  const TruncatedLengthVector v2(Torus(), {l + 2, l, l}, 2);
  // Functionals of v2 are 9.5835, 9.5835 and 5.5835.
  const double expected =
      0.5 * (std::log(9.5835 / 7.5835) + std::log(7.5835 / 5.5835));
  EXPECT_NEAR(HilbertDistance(Torus(), v1, v2), expected, 1e-14);
  EXPECT_NEAR(HilbertDistance(Torus(), v1, v2), 0.27011, 1e-4);
  EXPECT_NEAR(CornerFormDistance(v1, v2), expected, 1e-14);
  EXPECT_NEAR(ConePathDistance(Torus(), v1.lengths(), v2.lengths()), expected,
              1e-14);
}

TEST(HilbertDistance, TrivialCases) {
  const TruncatedLengthVector v =
      LengthVector(MarkedStructure::ModularTorus(), Torus());
  EXPECT_EQ(HilbertDistance(Torus(), v, v), 0);
  Vec triple = v.lengths();
  for (double& x : triple) x *= 3;
  EXPECT_NEAR(HilbertDistance(Torus(), v.lengths(), triple), 0, 1e-15);
}

TEST(HilbertDistance, RejectsNonpositiveFunctionals) {
  try {
    HilbertDistance(Torus(), Vec{5, 1, 1}, Vec{1, 1, 1});
    FAIL();
  } catch (const InvalidInputError& e) {
    EXPECT_GE(e.index(), 0);
  }
  EXPECT_THROW(HilbertDistance(Torus(), Vec{1, 1}, Vec{1, 1, 1}),
               InvalidInputError);
}

TEST(HilbertDistance, ThreeFormsAgreeAndTriangleInequality) {
  Rng rng(51);
  for (int trial = 0; trial < 500; ++trial) {
    const TruncatedLengthVector a = LengthVector(RandomStructure(rng), Torus());
    const TruncatedLengthVector b = LengthVector(RandomStructure(rng), Torus());
    const TruncatedLengthVector c = LengthVector(RandomStructure(rng), Torus());
    const double d = HilbertDistance(Torus(), a, b);
    EXPECT_NEAR(CornerFormDistance(a, b), d, 1e-12);
    EXPECT_NEAR(ConePathDistance(Torus(), a.lengths(), b.lengths()), d, 1e-12);
    EXPECT_LE(HilbertDistance(Torus(), a, c),
              d + HilbertDistance(Torus(), b, c) + 1e-9);
  }
}

TEST(ODistConstant, ModularTorus) {
  const TruncatedLengthVector v =
      LengthVector(MarkedStructure::ModularTorus(), Torus());
  const double l = v[0];
  EXPECT_NEAR(ODistConstant(v),
              std::max(0.5 * std::log(l) - std::log(2.0),
                       0.5 * l + 0.5 * std::log(2.0)),
              1e-15);
  EXPECT_NEAR(ODistConstant(v), 4.1383, 1e-4);
  Vec doubled = v.lengths();
  for (double& x : doubled) x *= 2;
  EXPECT_GT(ODistConstant(TruncatedLengthVector(Torus(), doubled, 2)),
            ODistConstant(v));
  EXPECT_GE(ODistConstant(v), 0.5 * std::log(2.0));
}

TEST(RadialComparison, WithinTheConstant) {
  const MarkedStructure x = MarkedStructure::ModularTorus();
  const TruncatedLengthVector v0 = LengthVector(x, Torus());
  const double c = ODistConstant(v0);
  EXPECT_NEAR(RadialComparison(v0, v0), -0.5 * std::log(v0[0]), 1e-15);
  for (const Slope& a : {Slope(1, 0), Slope(1, 1), Slope(2, 1)}) {
    const EarthquakeFlow flow(x, a, 1);
    for (int k = 0; k <= 64; ++k) {
      const double t = 200.0 * k / 64;
      EXPECT_LE(std::fabs(RadialComparison(v0, flow.LengthVector(Torus(), t))),
                c);
    }
  }
  // Scaling v0 by lambda leaves the distance at 0.
  Vec scaled = v0.lengths();
  for (double& x : scaled) x *= 5;
  EXPECT_NEAR(RadialComparison(v0, TruncatedLengthVector(Torus(), scaled, 2)),
              -0.5 * std::log(5 * v0[0]), 1e-12);
}

TEST(FlipComparison, BoundedByTheCeiling) {
  const MarkedStructure x = MarkedStructure::ModularTorus();
  const TruncatedLengthVector v0 = LengthVector(x, Torus());
  for (int arc = 0; arc < 3; ++arc) {
    const PreferredTriangulation flipped = FlipSlopeLabelled(Torus(), arc);
    for (const Slope& a : {Slope(1, 0), Slope(1, 1), Slope(2, 1)}) {
      const EarthquakeFlow flow(x, a, 1);
      std::vector<TruncatedLengthVector> samples;
      for (int t = 0; t <= 200; t += 5) {
        samples.push_back(flow.LengthVector(Torus(), t));
      }
      const FlipComparisonReport r =
          FlipComparison(Torus(), flipped, v0, samples);
      EXPECT_EQ(r.flipped_arc, arc);
      EXPECT_LE(r.max_difference, r.ceiling);
      // t = 0 of the flow reproduces v0 to rounding.
      EXPECT_NEAR(r.rows.front().diff, 0, 1e-14);
      // The geometric flipped vector agrees with the Ptolemy one.
      const FlipComparisonReport single =
          FlipComparison(Torus(), flipped, v0, {&v0, 1});
      EXPECT_EQ(single.rows[0].d_gamma_prime, 0);
    }
  }
  EXPECT_THROW(FlipComparison(Torus(), Torus(), v0, {}), InvalidInputError);
}

TEST(FlipComparison, DistancesGrowLikeHalfLogT) {
  const MarkedStructure x = MarkedStructure::ModularTorus();
  const TruncatedLengthVector v0 = LengthVector(x, Torus());
  const EarthquakeFlow flow(x, Slope(1, 0), 1);
  // Least-squares slope of d against log t on t in [50, 200].
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (double t = 50; t <= 200; t += 5) {
    const double lx = std::log(t);
    const double d = HilbertDistance(Torus(), v0, flow.LengthVector(Torus(), t));
    sx += lx;
    sy += d;
    sxx += lx * lx;
    sxy += lx * d;
    ++n;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  EXPECT_NEAR(slope, 0.5, 0.05);
}

}  // namespace
}  // namespace hilbert_teich
