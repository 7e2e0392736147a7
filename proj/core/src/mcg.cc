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

#include "hilbert_teich/mcg.h"

#include <cmath>
#include <cstdlib>
#include <utility>

#include "hilbert_teich/earthquake.h"
#include "hilbert_teich/errors.h"
#include "hilbert_teich/teich_hilbert.h"
#include "hilbert_teich/words.h"

namespace hilbert_teich {

MappingClass::MappingClass(const IntMatrix2& m) : m_(m) {
  if (m.Det() != 1) {
    throw InvalidInputError("mapping class matrix must have determinant 1");
  }
}

MappingClass MappingClass::DehnTwist(const Slope& alpha) {
  const IntMatrix2 g = BasisMatrixFor(alpha);
  return MappingClass(g * IntMatrix2{1, 1, 0, 1} * g.InverseUnimodular());
}

MappingClass MappingClass::Power(int n) const {
  MappingClass base = n < 0 ? Inverse() : *this;
  MappingClass out = Identity();
  for (unsigned k = static_cast<unsigned>(std::abs(n)); k > 0; k >>= 1) {
    if (k & 1) out = out * base;
    base = base * base;
  }
  return out;
}

Slope ActOnSlope(const MappingClass& g, const Slope& s) {
  return Apply(g.matrix(), s);
}

MarkedStructure ActOnStructure(const MappingClass& g,
                               const MarkedStructure& x) {
  // rho o phi_{g^-1} sends a, b, ab to conjugates of the slope words of
  // g^-1 (1/0), g^-1 (0/1), g^-1 (1/1); their traces fix the structure and
  // avoid the cancellation in the realizing words.
  const MappingClass back = g.Inverse();
  return MarkedStructure::FromTraceTriple(
      x.AbsTrace(ActOnSlope(back, Slope(1, 0))),
      x.AbsTrace(ActOnSlope(back, Slope(0, 1))),
      x.AbsTrace(ActOnSlope(back, Slope(1, 1))), x.rho0());
}

TruncatedLengthVector OrbitLengthVector(const MappingClass& g, int n,
                                        const MarkedStructure& x,
                                        const PreferredTriangulation& gamma) {
  const MappingClass back = g.Power(-n);
  std::vector<double> lengths;
  for (const Slope& s : ArcSlopes(gamma)) {
    lengths.push_back(ArcLength(x, ActOnSlope(back, s)));
  }
  return TruncatedLengthVector(gamma, std::move(lengths), x.rho0());
}

double TwistDistortionBound(const PreferredTriangulation& gamma,
                            const Slope& alpha, double l, double rho0) {
  if (!(l > 0) || !(rho0 > 0)) {
    throw InvalidInputError("length bound and rho0 must be positive");
  }
  double total = 0;
  for (const Slope& s : ArcSlopes(gamma)) {
    total += static_cast<double>(IntersectionNumber(s, alpha));
  }
  return 2 * std::log1p(l / rho0 * total);
}

std::vector<OrbitRow> OrbitDistances(const MappingClass& g,
                                     const MarkedStructure& x,
                                     const MarkedStructure& y, int count,
                                     const PreferredTriangulation& gamma) {
  if (count < 0) throw InvalidInputError("orbit length must be nonnegative");
  std::vector<OrbitRow> rows;
  TruncatedLengthVector xn = OrbitLengthVector(g, 0, x, gamma);
  for (int n = 0; n <= count; ++n) {
    const TruncatedLengthVector yn = OrbitLengthVector(g, n, y, gamma);
    TruncatedLengthVector next = OrbitLengthVector(g, n + 1, x, gamma);
    rows.push_back({n, HilbertDistance(gamma, xn, yn),
                    HilbertDistance(gamma, xn, next)});
    xn = std::move(next);
  }
  return rows;
}

std::optional<NonIsometryWitness> FindNonIsometryWitness(
    const MappingClass& g, const MarkedStructure& x0,
    const PreferredTriangulation& gamma, double threshold) {
  static const Slope kSlopes[] = {{0, 1}, {1, 1}, {-1, 1},
                                  {1, 0}, {2, 1}, {1, 2}};
  static const double kShifts[] = {0.25, 0.5, 1, 2, 4, 8};
  const TruncatedLengthVector vx = LengthVector(x0, gamma);
  const TruncatedLengthVector gx = OrbitLengthVector(g, 1, x0, gamma);
  for (const Slope& s : kSlopes) {
    for (double t : kShifts) {
      const MarkedStructure y = Earthquake(x0, s, 1, t);
      const double before = HilbertDistance(gamma, vx, LengthVector(y, gamma));
      const double after =
          HilbertDistance(gamma, gx, OrbitLengthVector(g, 1, y, gamma));
      if (std::fabs(after - before) > threshold) {
        return NonIsometryWitness{x0, y, s, t, before, after};
      }
    }
  }
  return std::nullopt;
}

}  // namespace hilbert_teich
