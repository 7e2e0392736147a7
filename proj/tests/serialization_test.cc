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

#include <gtest/gtest.h>

#include "hilbert_teich/errors.h"
#include "hilbert_teich/random.h"

namespace hilbert_teich {
namespace {

TEST(Serialization, TriangulationRoundTrip) {
  for (const PreferredTriangulation& g :
       {PreferredTriangulation::OncePuncturedTorus(),
        PreferredTriangulation::FourPuncturedSphere()}) {
    const std::string text = TriangulationToJson(g);
    const PreferredTriangulation back = TriangulationFromJson(text);
    EXPECT_EQ(back.arcs(), g.arcs());
    EXPECT_EQ(back.triangles(), g.triangles());
    EXPECT_EQ(back.discs(), g.discs());
    EXPECT_EQ(TriangulationToJson(back), text);
  }
  EXPECT_NE(TriangulationToJson(PreferredTriangulation::OncePuncturedTorus())
                .find("\"triangles\":[[0,1,2],[0,1,2]]"),
            std::string::npos);
}

TEST(Serialization, StructureRoundTripIsExact) {
  Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const MarkedStructure x = RandomStructure(rng);
    const MarkedStructure back = StructureFromJson(StructureToJson(x));
    EXPECT_EQ(back.a().a(), x.a().a());
    EXPECT_EQ(back.a().d(), x.a().d());
    EXPECT_EQ(back.b().b(), x.b().b());
    EXPECT_EQ(back.b().c(), x.b().c());
    EXPECT_EQ(back.rho0(), x.rho0());
  }
}

TEST(Serialization, Multicurve) {
  const WeightedMulticurve mu = WeightedMulticurve::Single(Slope(-2, 3), 0.1);
  const std::string text = MulticurveToJson(mu);
  EXPECT_EQ(text, "[{\"p\": -2, \"q\": 3, \"w\": 0.10000000000000001}]");
  const WeightedMulticurve back = MulticurveFromJson(text);
  ASSERT_EQ(back.components().size(), 1u);
  EXPECT_EQ(back.components()[0].slope, Slope(-2, 3));
  EXPECT_EQ(back.components()[0].weight, 0.1);
}

TEST(Serialization, RejectsMalformedInput) {
  EXPECT_THROW(TriangulationFromJson("{"), InvalidInputError);
  EXPECT_THROW(TriangulationFromJson("{\"g\": 1}"), InvalidInputError);
  EXPECT_THROW(StructureFromJson("{\"A\": [1, 2], \"B\": [1, 0, 0, 1]}"),
               InvalidInputError);
  EXPECT_THROW(MulticurveFromJson("{\"p\": 1}"), InvalidInputError);
  EXPECT_THROW(MulticurveFromJson("[{\"p\": 2, \"q\": 4, \"w\": 1}]"),
               InvalidInputError);
}

}  // namespace
}  // namespace hilbert_teich
