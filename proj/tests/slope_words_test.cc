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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>

#include <gtest/gtest.h>

#include "hilbert_teich/decorated_surface.h"
#include "hilbert_teich/errors.h"
#include "hilbert_teich/random.h"
#include "hilbert_teich/slope.h"
#include "hilbert_teich/words.h"
#include "oracles.h"

namespace hilbert_teich {
namespace {

Slope RandomSlope(Rng& rng, int range = 7) {
  for (;;) {
    const int p = rng.UniformInt(-range, range), q = rng.UniformInt(0, range);
    if ((p != 0 || q != 0) && std::gcd(p, q) == 1) return Slope(p, q);
  }
}

IntMatrix2 RandomSL2(Rng& rng) {
  IntMatrix2 m;
  const IntMatrix2 r{1, 1, 0, 1}, l{1, 0, 1, 1}, ri{1, -1, 0, 1},
      li{1, 0, -1, 1};
  for (int k = rng.UniformInt(0, 8); k > 0; --k) {
    switch (rng.UniformInt(0, 3)) {
      case 0: m = m * r; break;
      case 1: m = m * l; break;
      case 2: m = m * ri; break;
      default: m = m * li; break;
    }
  }
  if (rng.UniformInt(0, 1)) m = m * IntMatrix2{-1, 0, 0, -1};
  return m;
}

std::pair<int64_t, int64_t> ExponentSums(const Word& w) {
  int64_t a = 0, b = 0;
  for (char c : w) {
    a += c == 'a' ? 1 : c == 'A' ? -1 : 0;
    b += c == 'b' ? 1 : c == 'B' ? -1 : 0;
  }
  return {a, b};
}

TEST(Slope, Canonicalizes) {
  EXPECT_EQ(Slope(-1, -2), Slope(1, 2));
  EXPECT_EQ(Slope(-1, 0), Slope(1, 0));
  EXPECT_EQ(Slope(2, -1), Slope(-2, 1));
  EXPECT_EQ(Slope(1, 0).ToString(), "1/0");
  EXPECT_THROW(Slope(0, 0), InvalidInputError);
  EXPECT_THROW(Slope(2, 4), InvalidInputError);
}

TEST(Slope, Parse) {
  EXPECT_EQ(Slope::Parse("3/1"), Slope(3, 1));
  EXPECT_EQ(Slope::Parse("-1/1"), Slope(-1, 1));
  EXPECT_FALSE(Slope::Parse("2/4"));
  EXPECT_FALSE(Slope::Parse("x"));
  EXPECT_FALSE(Slope::Parse("1/"));
  EXPECT_FALSE(Slope::Parse("1/2/3"));
}

TEST(IntersectionNumber, HandExamplesAndCrossingOracle) {
  EXPECT_EQ(IntersectionNumber(Slope(1, 0), Slope(0, 1)), 1);
  EXPECT_EQ(IntersectionNumber(Slope(2, 1), Slope(2, 1)), 0);
  EXPECT_EQ(IntersectionNumber(Slope(3, 1), Slope(1, 2)), 5);
  EXPECT_EQ(oracle::CrossingCount(3, 1, 1, 2), 5);
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const Slope s1 = RandomSlope(rng), s2 = RandomSlope(rng);
    const int64_t i = IntersectionNumber(s1, s2);
    EXPECT_EQ(i, IntersectionNumber(s2, s1));
    EXPECT_EQ(i, oracle::CrossingCount(s1.p(), s1.q(), s2.p(), s2.q()))
        << s1.ToString() << " " << s2.ToString();
  }
}

TEST(BasisMatrixFor, SendsE1ToSlope) {
  Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const Slope s = RandomSlope(rng, 40);
    const IntMatrix2 g = BasisMatrixFor(s);
    EXPECT_EQ(g.Det(), 1);
    EXPECT_EQ(g.a, s.p());
    EXPECT_EQ(g.c, s.q());
    EXPECT_EQ(Apply(g, Slope(1, 0)), s);
  }
}

TEST(Words, ReductionAndInverse) {
  EXPECT_EQ(FreeReduce("abBAa"), "a");
  EXPECT_EQ(FreeReduce("aAbB"), "");
  EXPECT_EQ(InverseWord("abA"), "aBA");
  EXPECT_EQ(FreeReduce(std::string("ab") + InverseWord("ab")), "");
}

TEST(SlopeWord, HandExamples) {
  EXPECT_EQ(SlopeWord(Slope(1, 0)), "a");
  EXPECT_EQ(SlopeWord(Slope(0, 1)), "b");
  EXPECT_EQ(SlopeWord(Slope(2, 1)), "baa");
  EXPECT_EQ(SlopeWord(Slope(-1, 1)), "bA");
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Slope s = RandomSlope(rng, 20);
    const auto [a, b] = ExponentSums(SlopeWord(s));
    EXPECT_EQ(a, s.p());
    EXPECT_EQ(b, s.q());
  }
}

TEST(FreeAutomorphism, RealizesTheHomologyAction) {
  Rng rng(24);
  for (int trial = 0; trial < 300; ++trial) {
    const IntMatrix2 g = RandomSL2(rng);
    const FreeAutomorphism phi = FreeAutomorphism::Realizing(g);
    const auto [aa, ac] = ExponentSums(phi.image_a());
    const auto [ba, bc] = ExponentSums(phi.image_b());
    EXPECT_EQ(aa, g.a);
    EXPECT_EQ(ac, g.c);
    EXPECT_EQ(ba, g.b);
    EXPECT_EQ(bc, g.d);
  }
  EXPECT_THROW(FreeAutomorphism::Realizing(IntMatrix2{2, 0, 0, 1}),
               InvalidInputError);
}

TEST(FreeAutomorphism, PreservesTheCommutatorClass) {
  // An automorphism induced by a homeomorphism of S_{1,1} sends [a, b] to a
  // conjugate of [a, b]^{+-1}; on a cusped structure the trace stays -2.
  const MarkedStructure x = MarkedStructure::ModularTorus();
  Rng rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    const FreeAutomorphism phi = FreeAutomorphism::Realizing(RandomSL2(rng));
    const Mobius a = EvaluateWord(phi.image_a(), x.a(), x.b());
    const Mobius b = EvaluateWord(phi.image_b(), x.a(), x.b());
    const Mobius k = a * b * a.Inverse() * b.Inverse();
    EXPECT_NEAR(k.Trace(), -2, 1e-9 * std::max(1.0, a.MaxAbsEntry() *
                                                       a.MaxAbsEntry() *
                                                       b.MaxAbsEntry() *
                                                       b.MaxAbsEntry()));
  }
}

TEST(FreeAutomorphism, TracesFollowTheSlopes) {
  // |tr rho(phi_g(w_s))| = |tr rho(w_{g s})| for every slope.
  const MarkedStructure x = MarkedStructure::FromTraceTriple(3, 6, 15);
  Rng rng(26);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix2 g = RandomSL2(rng);
    const Slope s = RandomSlope(rng, 3);
    const FreeAutomorphism phi = FreeAutomorphism::Realizing(g);
    // The image word is a conjugate with the same trace.  Words of 30
    // letters lose ~1e-8 in double on this holonomy, so multiply out in
    // long double.
    const Word w = CyclicallyReduce(phi.Apply(SlopeWord(s)));
    const double lhs = oracle::LongDoubleWordTrace(
        w, {x.a().a(), x.a().b(), x.a().c(), x.a().d()},
        {x.b().a(), x.b().b(), x.b().c(), x.b().d()});
    EXPECT_NEAR(lhs / x.AbsTrace(Apply(g, s)), 1, 1e-9);
  }
}

}  // namespace
}  // namespace hilbert_teich
