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

#include "hilbert_teich/quadrilateral.h"

#include <algorithm>
#include <cmath>

#include "hilbert_teich/errors.h"

namespace hilbert_teich {

namespace {

// Image of z under the Mobius map with p0 -> 0, p1 -> 1, p2 -> infinity.
// Returns +infinity if z == p2.
double Normalize(const IdealPoint& p0, const IdealPoint& p1,
                 const IdealPoint& p2, const IdealPoint& z) {
  if (z == p2) return HUGE_VAL;
  if (z.is_infinite()) return (p1.x() - p2.x()) / (p1.x() - p0.x());
  if (p0.is_infinite()) return (p1.x() - p2.x()) / (z.x() - p2.x());
  if (p1.is_infinite()) return (z.x() - p0.x()) / (z.x() - p2.x());
  if (p2.is_infinite()) return (z.x() - p0.x()) / (p1.x() - p0.x());
  return ((z.x() - p0.x()) * (p1.x() - p2.x())) /
         ((z.x() - p2.x()) * (p1.x() - p0.x()));
}

double Corner(const DecoratedQuadrilateral& q, int p, int a, int b) {
  return 0.5 * (TruncatedLength(q[p], q[a]) + TruncatedLength(q[p], q[b]) -
                TruncatedLength(q[a], q[b]));
}

}  // namespace

double Shearing(const DecoratedQuadrilateral& quad, Diagonal which) {
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (quad[i].base == quad[j].base) {
        throw InvalidInputError("quadrilateral has repeated ideal points", j);
      }
    }
  }
  const int shift = which == Diagonal::kAlpha ? 0 : 1;
  const IdealPoint& o1 = quad[shift % 4].base;
  const IdealPoint& o2 = quad[(shift + 1) % 4].base;
  const IdealPoint& o3 = quad[(shift + 2) % 4].base;
  const IdealPoint& o4 = quad[(shift + 3) % 4].base;
  const double r = Normalize(o1, o2, o4, o3) - 1;
  if (!(r > 0) || !std::isfinite(r)) {
    throw InvalidInputError(
        "quadrilateral vertices are not in counterclockwise order");
  }
  return std::log(r);
}

FlipCorners AnalyzeDiagonalFlip(const DecoratedQuadrilateral& q) {
  FlipCorners out;
  out.before[0] = {Corner(q, 3, 0, 1), Corner(q, 0, 3, 1)};
  out.before[1] = {Corner(q, 0, 1, 3), Corner(q, 1, 0, 3)};
  out.before[2] = {Corner(q, 1, 2, 3), Corner(q, 2, 1, 3)};
  out.before[3] = {Corner(q, 2, 3, 1), Corner(q, 3, 2, 1)};
  out.after[0] = {Corner(q, 3, 0, 2), Corner(q, 0, 3, 2)};
  out.after[1] = {Corner(q, 0, 1, 2), Corner(q, 1, 0, 2)};
  out.after[2] = {Corner(q, 1, 2, 0), Corner(q, 2, 1, 0)};
  out.after[3] = {Corner(q, 2, 3, 0), Corner(q, 3, 2, 0)};
  out.shear = Shearing(q, Diagonal::kAlpha);
  out.r = std::exp(out.shear);
  return out;
}

FlipBoundDeviations MeasureFlipBounds(const FlipCorners& c) {
  const auto& l = c.before;
  const auto& m = c.after;
  const double shr = c.shear;
  FlipBoundDeviations d{};
  for (int i : {0, 2}) {
    d.start_shift = std::max(d.start_shift, std::fabs(m[i][0] - l[i][0] + shr));
    d.end_shift = std::max(d.end_shift, std::fabs(m[i][1] - l[i][1] - shr));
    d.end_shift_cross =
        std::max(d.end_shift_cross, std::fabs(m[i][1] - l[i][0] - shr));
  }
  for (int i : {1, 3}) {
    d.start_fixed = std::max(d.start_fixed, std::fabs(m[i][0] - l[i][0]));
    d.end_fixed = std::max(d.end_fixed, std::fabs(m[i][1] - l[i][1]));
  }
  d.exact_l42 = std::fabs(
      m[3][1] - (l[3][1] + c.shear - std::log1p(c.r)));
  return d;
}

DecoratedQuadrilateral RandomDecoratedQuadrilateral(Rng& rng) {
  std::array<double, 4> xs;
  for (double& x : xs) x = rng.Uniform(-5, 5);
  std::sort(xs.begin(), xs.end());
  DecoratedQuadrilateral q;
  for (int i = 0; i < 4; ++i) {
    q[i] = DecoratedCusp{IdealPoint::At(xs[i]),
                         std::exp(rng.Uniform(-4, 1))};
  }
  if (Corner(q, 3, 0, 1) < Corner(q, 3, 2, 1)) {
    std::rotate(q.begin(), q.begin() + 1, q.end());
  }
  return q;
}

}  // namespace hilbert_teich
