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

// The mapping class group of S_{1,1} acting through SL(2, Z) on slopes and
// on marked structures, with the Dehn-twist distortion experiments.

#ifndef HILBERT_TEICH_MCG_H_
#define HILBERT_TEICH_MCG_H_

#include <optional>
#include <vector>

#include "hilbert_teich/decorated_surface.h"
#include "hilbert_teich/slope.h"
#include "hilbert_teich/triangulation.h"

namespace hilbert_teich {

class MappingClass {
 public:
  // Throws InvalidInputError unless det m == 1.
  explicit MappingClass(const IntMatrix2& m);

  static MappingClass Identity() { return MappingClass(IntMatrix2{}); }
  // The positive twist about alpha: g [[1, 1], [0, 1]] g^-1 with g e1 = alpha.
  static MappingClass DehnTwist(const Slope& alpha);

  const IntMatrix2& matrix() const { return m_; }
  MappingClass operator*(const MappingClass& o) const {
    return MappingClass(m_ * o.m_);
  }
  MappingClass Inverse() const { return MappingClass(m_.InverseUnimodular()); }
  // g^n for any integer n.
  MappingClass Power(int n) const;
  bool operator==(const MappingClass&) const = default;

 private:
  IntMatrix2 m_;
};

Slope ActOnSlope(const MappingClass& g, const Slope& s);

// (X, f o g^-1): the holonomy remarked by an automorphism realizing g^-1, so
// that l_s(gX) = l_{g^-1 s}(X).  Returned in the normal form of
// MarkedStructure::FromTraceTriple.
MarkedStructure ActOnStructure(const MappingClass& g, const MarkedStructure& x);

// Length vector of g^n X on gamma, read from X through l_s(g^n X) =
// l_{g^-n s}(X).  Stays accurate when the holonomy of g^n X would not.
TruncatedLengthVector OrbitLengthVector(const MappingClass& g, int n,
                                        const MarkedStructure& x,
                                        const PreferredTriangulation& gamma);

// log C with C = (1 + (l / rho0) sum_i i(eta_i, alpha))^2: every triangle
// functional ratio moves by a factor in [1/C, C] under the twist, so the
// distance moves by at most log C on M_{alpha, l}.
double TwistDistortionBound(const PreferredTriangulation& gamma,
                            const Slope& alpha, double l, double rho0);

struct OrbitRow {
  int n;
  double d_orbit_pair;   // d(g^n X, g^n Y)
  double d_consecutive;  // d(g^n X, g^{n+1} X)
};

// Rows n = 0..count.
std::vector<OrbitRow> OrbitDistances(const MappingClass& g,
                                     const MarkedStructure& x,
                                     const MarkedStructure& y, int count,
                                     const PreferredTriangulation& gamma);

struct NonIsometryWitness {
  MarkedStructure x;
  MarkedStructure y;
  Slope shift_slope;  // y is the earthquake of x along this slope
  double shift;       // at this amplitude (weight 1)
  double d_before;
  double d_after;
  double delta() const { return d_after - d_before; }
};

// Scans y = E^t_s x0 over s in {0/1, 1/1, -1/1, 1/0, 2/1, 1/2} and
// t in {0.25, 0.5, 1, 2, 4, 8} in that order; returns the first pair with
// |d(gx, gy) - d(x, y)| > threshold, or nullopt.
std::optional<NonIsometryWitness> FindNonIsometryWitness(
    const MappingClass& g, const MarkedStructure& x0,
    const PreferredTriangulation& gamma, double threshold = 0.01);

}  // namespace hilbert_teich

#endif  // HILBERT_TEICH_MCG_H_
