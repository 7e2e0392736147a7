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

#include "hilbert_teich/hyperbolic.h"

#include <cfloat>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "hilbert_teich/errors.h"
#include "hilbert_teich/random.h"
#include "oracles.h"

namespace hilbert_teich {
namespace {

using Complex = std::complex<double>;

Mobius RandomMobius(Rng& rng) {
  for (;;) {
    const double a = rng.Uniform(-2, 2), b = rng.Uniform(-2, 2),
                 c = rng.Uniform(-2, 2), d = rng.Uniform(-2, 2);
    const double det = a * d - b * c;
    if (det > 0.1) return Mobius::FromEntries(a, b, c, d);
  }
}

DecoratedCusp RandomFiniteCusp(Rng& rng) {
  return MakeCusp(IdealPoint::At(rng.Uniform(-3, 3)),
                  std::exp(rng.Uniform(-3, 0)));
}

// Residual of z against the boundary of the horoball `c`.
double OffBoundary(const DecoratedCusp& c, Complex z) {
  if (c.base.is_infinite()) return z.imag() - c.size;
  const Complex center(c.base.x(), 0.5 * c.size);
  return std::abs(z - center) - 0.5 * c.size;
}

// Three points on the boundary of the horoball `c`.
std::array<Complex, 3> BoundarySamples(const DecoratedCusp& c) {
  if (c.base.is_infinite()) {
    return {Complex(-1, c.size), Complex(0.3, c.size), Complex(2, c.size)};
  }
  std::array<Complex, 3> out;
  const double angles[] = {0.4, 1.9, 3.7};
  for (int k = 0; k < 3; ++k) {
    out[k] = Complex(c.base.x(), 0.5 * c.size) +
             0.5 * c.size * std::polar(1.0, angles[k]);
  }
  return out;
}

TEST(Mobius, DeterminantStaysOne) {
  Rng rng(1);
  Mobius m;
  for (int k = 0; k < 500; ++k) {
    // Long products become rank-one numerically; restart once entries grow.
    m = m.MaxAbsEntry() > 1e4 ? RandomMobius(rng) : m * RandomMobius(rng);
    const double scale = m.MaxAbsEntry();
    m = Mobius::FromEntries(m.a() / scale, m.b() / scale, m.c() / scale,
                            m.d() / scale);
    // ad - bc cancels entries of size |a d|; only that much is attainable.
    EXPECT_NEAR(m.Det(), 1,
                8 * DBL_EPSILON *
                    (std::fabs(m.a() * m.d()) + std::fabs(m.b() * m.c())));
  }
  EXPECT_THROW(Mobius::FromEntries(0, 1, 1, 0), InvalidInputError);
}

TEST(ApplyMobius, HandExamples) {
  const DecoratedCusp at_inf{IdealPoint::Infinity(), 2};
  const DecoratedCusp same = ApplyMobius(Mobius::Identity(), at_inf);
  EXPECT_TRUE(same.base.is_infinite());
  EXPECT_EQ(same.size, 2);
  const DecoratedCusp image = ApplyMobius(Mobius::Raw(0, -1, 1, 0), at_inf);
  ASSERT_FALSE(image.base.is_infinite());
  EXPECT_EQ(image.base.x(), 0);
  EXPECT_NEAR(image.size, 0.5, 1e-15);
}

TEST(ApplyMobius, PreservesTangencyAndComposes) {
  Rng rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const Mobius m1 = RandomMobius(rng), m2 = RandomMobius(rng);
    const DecoratedCusp c =
        trial % 5 == 0 ? DecoratedCusp{IdealPoint::Infinity(), 1.5}
                       : RandomFiniteCusp(rng);
    const DecoratedCusp image = ApplyMobius(m1, c);
    for (Complex z : BoundarySamples(c)) {
      EXPECT_NEAR(OffBoundary(image, m1.Apply(z)),
                  0, 1e-9 * std::max(1.0, image.size));
    }
    const DecoratedCusp two = ApplyMobius(m2, image);
    const DecoratedCusp once = ApplyMobius(m2 * m1, c);
    ASSERT_EQ(two.base.is_infinite(), once.base.is_infinite());
    if (!once.base.is_infinite()) {
      EXPECT_NEAR(two.base.x(), once.base.x(), 1e-10 * std::max(1.0, std::fabs(once.base.x())));
    }
    EXPECT_NEAR(two.size / once.size, 1, 1e-10);
  }
}

TEST(TruncatedLength, VerticalSegment) {
  const DecoratedCusp zero = MakeCusp(IdealPoint::At(0), 1);
  const DecoratedCusp top{IdealPoint::Infinity(), std::exp(1.0)};
  EXPECT_NEAR(TruncatedLength(zero, top), 1, 1e-15);
  EXPECT_NEAR(LambdaLength(zero, top), std::exp(0.5), 1e-15);
  EXPECT_THROW(TruncatedLength(zero, zero), InvalidInputError);
  EXPECT_THROW(MakeCusp(IdealPoint::At(0), 0), InvalidInputError);
}

TEST(TruncatedLength, MatchesQuadrature) {
  EXPECT_NEAR(oracle::QuadratureTruncatedLength(0, 0.5, 1, 0.5),
              std::log(4.0), 1e-9);
  const DecoratedCusp p = MakeCusp(IdealPoint::At(0), 0.5);
  const DecoratedCusp q = MakeCusp(IdealPoint::At(1), 0.5);
  EXPECT_NEAR(TruncatedLength(p, q), std::log(4.0), 1e-15);
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const double x = rng.Uniform(-2, 0), y = rng.Uniform(0.5, 2);
    const double dx = std::exp(rng.Uniform(-3, -1)),
                 dy = std::exp(rng.Uniform(-3, -1));
    EXPECT_NEAR(TruncatedLength(MakeCusp(IdealPoint::At(x), dx),
                                MakeCusp(IdealPoint::At(y), dy)),
                oracle::QuadratureTruncatedLength(x, dx, y, dy), 1e-8);
  }
}

TEST(TruncatedLength, NegativeForOverlappingHoroballs) {
  const DecoratedCusp p = MakeCusp(IdealPoint::At(0), 2);
  const DecoratedCusp q = MakeCusp(IdealPoint::At(1), 2);
  EXPECT_LT(TruncatedLength(p, q), 0);
}

TEST(TruncatedLength, MobiusInvariant) {
  Rng rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    const DecoratedCusp c1 = RandomFiniteCusp(rng), c2 = RandomFiniteCusp(rng);
    if (c1.base == c2.base) continue;
    const Mobius m = RandomMobius(rng);
    EXPECT_NEAR(TruncatedLength(ApplyMobius(m, c1), ApplyMobius(m, c2)),
                TruncatedLength(c1, c2), 1e-9);
  }
}

TEST(LambdaLength, PtolemyOnRandomQuadruples) {
  Rng rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    std::array<double, 4> x;
    for (double& v : x) v = rng.Uniform(-5, 5);
    std::sort(x.begin(), x.end());
    std::array<DecoratedCusp, 4> c;
    std::array<double, 4> d;
    for (int k = 0; k < 4; ++k) {
      d[k] = std::exp(rng.Uniform(-3, 1));
      c[k] = MakeCusp(IdealPoint::At(x[k]), d[k]);
    }
    // Oracle: lambda from the explicit formula, not LambdaLength.
    auto lam = [&](int i, int j) {
      return oracle::Lambda(x[i], d[i], x[j], d[j]);
    };
    EXPECT_NEAR(lam(0, 2) * lam(1, 3),
                lam(0, 1) * lam(2, 3) + lam(0, 3) * lam(1, 2),
                1e-9 * lam(0, 2) * lam(1, 3));
    EXPECT_NEAR(LambdaLength(c[0], c[2]) / lam(0, 2), 1, 1e-12);
    const double lhs = LambdaLength(c[0], c[2]) * LambdaLength(c[1], c[3]);
    const double rhs = LambdaLength(c[0], c[1]) * LambdaLength(c[2], c[3]) +
                       LambdaLength(c[0], c[3]) * LambdaLength(c[1], c[2]);
    EXPECT_NEAR(lhs / rhs, 1, 1e-9);
  }
}

TEST(AxisAndTranslationLength, Diagonal) {
  const double e = std::exp(1.0);
  const auto [axis, length] =
      AxisAndTranslationLength(Mobius::FromEntries(e, 0, 0, 1 / e));
  EXPECT_NEAR(length, 2, 1e-14);
  const bool zero_inf = (axis.from == IdealPoint::At(0) && axis.to.is_infinite()) ||
                        (axis.to == IdealPoint::At(0) && axis.from.is_infinite());
  EXPECT_TRUE(zero_inf);
  EXPECT_THROW(AxisAndTranslationLength(Mobius::Raw(1, 1, 0, 1)),
               InvalidInputError);
  EXPECT_THROW(AxisAndTranslationLength(Mobius::Raw(0, -1, 1, 0)),
               InvalidInputError);
}

TEST(AxisAndTranslationLength, TraceThreeMatchesDisplacement) {
  const Mobius m = Mobius::FromEntries(1, 1, 1, 2);
  const double length = AxisAndTranslationLength(m).second;
  EXPECT_NEAR(length, 2 * std::acosh(1.5), 1e-14);
  EXPECT_NEAR(length, 1.92485, 1e-5);
  EXPECT_NEAR(length, oracle::DisplacementTranslationLength(1, 1, 1, 2), 1e-12);
}

TEST(AxisAndTranslationLength, ConjugationEquivariant) {
  Rng rng(6);
  int tested = 0;
  while (tested < 200) {
    const Mobius m = RandomMobius(rng);
    if (std::fabs(m.Trace()) < 2.2 || std::fabs(m.c()) < 1e-3) continue;
    const Mobius n = RandomMobius(rng);
    const auto [axis, length] = AxisAndTranslationLength(m);
    const auto [axis2, length2] =
        AxisAndTranslationLength(n * m * n.Inverse());
    EXPECT_NEAR(length2, length, 1e-10);
    EXPECT_NEAR(length, oracle::DisplacementTranslationLength(
                            m.a(), m.b(), m.c(), m.d()),
                1e-8);
    const IdealPoint from = n.Apply(axis.from), to = n.Apply(axis.to);
    ASSERT_EQ(from.is_infinite(), axis2.from.is_infinite());
    ASSERT_EQ(to.is_infinite(), axis2.to.is_infinite());
    if (!from.is_infinite()) {
      EXPECT_NEAR(from.x(), axis2.from.x(), 1e-8 * std::max(1.0, std::fabs(from.x())));
    }
    if (!to.is_infinite()) {
      EXPECT_NEAR(to.x(), axis2.to.x(), 1e-8 * std::max(1.0, std::fabs(to.x())));
    }
    ++tested;
  }
}

TEST(TranslationAlongAxis, OneParameterSubgroupThroughM) {
  Rng rng(7);
  int tested = 0;
  while (tested < 200) {
    const Mobius m = RandomMobius(rng);
    if (std::fabs(m.Trace()) < 2.2) continue;
    const double length = AxisAndTranslationLength(m).second;
    const Mobius e0 = TranslationAlongAxis(m, 0);
    EXPECT_NEAR(e0.a(), 1, 1e-12);
    EXPECT_NEAR(e0.b(), 0, 1e-12);
    const Mobius el = TranslationAlongAxis(m, length);
    const double sign = m.Trace() > 0 ? 1 : -1;
    const double scale = m.MaxAbsEntry();
    EXPECT_NEAR(el.a(), sign * m.a(), 1e-9 * scale);
    EXPECT_NEAR(el.b(), sign * m.b(), 1e-9 * scale);
    EXPECT_NEAR(el.c(), sign * m.c(), 1e-9 * scale);
    EXPECT_NEAR(el.d(), sign * m.d(), 1e-9 * scale);
    const double s = rng.Uniform(-2, 2), t = rng.Uniform(-2, 2);
    const Mobius product =
        TranslationAlongAxis(m, s) * TranslationAlongAxis(m, t);
    const Mobius sum = TranslationAlongAxis(m, s + t);
    const double tol = 1e-10 * sum.MaxAbsEntry();
    EXPECT_NEAR(product.a(), sum.a(), tol);
    EXPECT_NEAR(product.b(), sum.b(), tol);
    EXPECT_NEAR(product.c(), sum.c(), tol);
    EXPECT_NEAR(product.d(), sum.d(), tol);
    // Commutes with m.
    const Mobius et = TranslationAlongAxis(m, t);
    const Mobius left = et * m, right = m * et;
    EXPECT_NEAR(left.b(), right.b(), 1e-9 * left.MaxAbsEntry());
    ++tested;
  }
}

TEST(LogScaledMatrix, TracksHugeProducts) {
  const Mobius m = Mobius::FromEntries(1, 1, 1, 2);
  LogScaledMatrix power;
  for (int k = 0; k < 2000; ++k) power = power * LogScaledMatrix(m);
  // tr(M^n) = 2 cosh(n l / 2).
  const double l = 2 * std::acosh(1.5);
  EXPECT_NEAR(power.LogAbsTrace(), 2000 * l / 2, 1e-9 * 2000 * l);
  const LogScaledMatrix t = ScaledTranslation(AxisGenerator(m), 3000);
  EXPECT_NEAR(t.LogAbsTrace(), 1500, 1e-9);
}

}  // namespace
}  // namespace hilbert_teich
