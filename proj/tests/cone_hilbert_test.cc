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

#include "hilbert_teich/cone_hilbert.h"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "hilbert_teich/errors.h"
#include "hilbert_teich/random.h"

namespace hilbert_teich {
namespace {

using Vec = std::vector<double>;

// A random cone with `facets` functionals in R^n, all positive at a random
// witness, plus interior points near the witness.
struct RandomCone {
  ConeFunctionalSet cone;
  Vec witness;
};

RandomCone MakeRandomCone(Rng& rng, int n, int facets) {
  Vec w(n);
  for (double& x : w) x = rng.Uniform(0.5, 2);
  std::vector<Vec> fs;
  while (static_cast<int>(fs.size()) < facets) {
    Vec f(n);
    double at_w = 0;
    for (int i = 0; i < n; ++i) {
      f[i] = rng.Uniform(-1, 1);
      at_w += f[i] * w[i];
    }
    if (std::fabs(at_w) < 0.05) continue;
    if (at_w < 0) {
      for (double& x : f) x = -x;
    }
    fs.push_back(f);
  }
  return {ConeFunctionalSet(n, fs, w), w};
}

Vec InteriorPoint(Rng& rng, const RandomCone& rc) {
  for (;;) {
    Vec x = rc.witness;
    for (double& v : x) v *= std::exp(rng.Uniform(-0.6, 0.6));
    bool inside = true;
    for (double f : rc.cone.EvaluateAll(x)) inside = inside && f > 1e-3;
    if (inside) return x;
  }
}

TEST(ConeFunctionalSet, RejectsBadInput) {
  EXPECT_THROW(ConeFunctionalSet(2, {}, Vec{1, 1}), InvalidInputError);
  EXPECT_THROW(ConeFunctionalSet(2, {{0, 0}}, Vec{1, 1}), InvalidInputError);
  EXPECT_THROW(ConeFunctionalSet(2, {{1, 0, 0}}, Vec{1, 1}),
               InvalidInputError);
  // Witness on a facet.
  EXPECT_THROW(ConeFunctionalSet(2, {{1, 0}, {0, 1}}, Vec{1, 0}),
               InvalidInputError);
}

TEST(Contains, HandExamples) {
  const ConeFunctionalSet orthant = ConeFunctionalSet::PositiveOrthant(2);
  EXPECT_TRUE(Contains(orthant, Vec{1, 2}));
  EXPECT_FALSE(Contains(orthant, Vec{1, -1}));
  const ConeFunctionalSet wedge(2, {{1, 0}, {0, 1}, {-1, 2}}, Vec{1, 1});
  EXPECT_FALSE(Contains(wedge, Vec{3, 1}));
  EXPECT_TRUE(Contains(wedge, Vec{2, 1}));
  EXPECT_THROW(Contains(orthant, Vec{1, 2, 3}), InvalidInputError);
}

TEST(BirkhoffDistance, HandExamples) {
  const ConeFunctionalSet o2 = ConeFunctionalSet::PositiveOrthant(2);
  EXPECT_NEAR(BirkhoffDistance(o2, Vec{1, 1}, Vec{2, 1}), 0.5 * std::log(2.0),
              1e-15);
  const ConeFunctionalSet o3 = ConeFunctionalSet::PositiveOrthant(3);
  EXPECT_NEAR(BirkhoffDistance(o3, Vec{1, 1, 1}, Vec{1, 2, 4}),
              0.5 * std::log(4.0), 1e-15);
  EXPECT_NEAR(BirkhoffDistance(o3, Vec{1, 2, 3}, Vec{3, 6, 9}), 0, 1e-15);
}

TEST(BirkhoffDistance, NamesTheFacetOfANonInteriorPoint) {
  const ConeFunctionalSet o3 = ConeFunctionalSet::PositiveOrthant(3);
  try {
    BirkhoffDistance(o3, Vec{1, 0, 1}, Vec{1, 1, 1});
    FAIL() << "expected a throw";
  } catch (const InvalidInputError& e) {
    EXPECT_EQ(e.index(), 1);
  }
}

TEST(YamadaDistance, HandExamples) {
  const ConeFunctionalSet o2 = ConeFunctionalSet::PositiveOrthant(2);
  EXPECT_NEAR(YamadaDistance(o2, Vec{1, 1}, Vec{2, 1}), 0.5 * std::log(2.0),
              1e-15);
  EXPECT_EQ(YamadaDistance(o2, Vec{1, 3}, Vec{1, 3}), 0);
}

TEST(CrossRatioDistance, HandExamples) {
  const ConeFunctionalSet o2 = ConeFunctionalSet::PositiveOrthant(2);
  EXPECT_NEAR(CrossRatioDistance(o2, Vec{1, 1}, Vec{2, 1}),
              0.5 * std::log(2.0), 1e-12);
  EXPECT_NEAR(CrossRatioDistance(o2, Vec{2, 1}, Vec{1, 1}),
              0.5 * std::log(2.0), 1e-12);
  EXPECT_EQ(CrossRatioDistance(o2, Vec{1, 2}, Vec{2, 4}), 0);
}

TEST(ConeHilbert, ThreeDefinitionsAgreeOnRandomCones) {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const RandomCone rc = MakeRandomCone(rng, 3, 3 + trial % 4);
    const Vec x = InteriorPoint(rng, rc), y = InteriorPoint(rng, rc);
    const double b = BirkhoffDistance(rc.cone, x, y);
    EXPECT_NEAR(YamadaDistance(rc.cone, x, y), b, 1e-12 * std::max(1.0, b));
    EXPECT_NEAR(CrossRatioDistance(rc.cone, x, y), b, 1e-9) << trial;
  }
}

TEST(ConeHilbert, MetricPropertiesOnRandomTriples) {
  Rng rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    const RandomCone rc = MakeRandomCone(rng, 4, 5);
    const Vec x = InteriorPoint(rng, rc), y = InteriorPoint(rng, rc),
              z = InteriorPoint(rng, rc);
    const double xy = BirkhoffDistance(rc.cone, x, y);
    EXPECT_LE(BirkhoffDistance(rc.cone, x, z),
              xy + BirkhoffDistance(rc.cone, y, z) + 1e-9);
    EXPECT_NEAR(BirkhoffDistance(rc.cone, y, x), xy, 1e-15);
    Vec sx = x, sy = y;
    for (double& v : sx) v *= 3.7;
    for (double& v : sy) v *= 0.02;
    EXPECT_NEAR(BirkhoffDistance(rc.cone, sx, sy), xy, 1e-12);
  }
}

TEST(ConeHilbert, ZeroExactlyOnProjectiveClasses) {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const RandomCone rc = MakeRandomCone(rng, 3, 4);
    const Vec x = InteriorPoint(rng, rc);
    Vec y = x;
    for (double& v : y) v *= 5;
    EXPECT_LE(BirkhoffDistance(rc.cone, x, y), 1e-12);
    y[0] *= 1 + 1e-6;
    EXPECT_GT(BirkhoffDistance(rc.cone, x, y), 1e-12);
  }
}

}  // namespace
}  // namespace hilbert_teich
