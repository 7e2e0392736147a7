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

// The Hilbert metric d^Gamma_h on truncated length vectors.

#ifndef HILBERT_TEICH_TEICH_HILBERT_H_
#define HILBERT_TEICH_TEICH_HILBERT_H_

#include <span>
#include <vector>

#include "hilbert_teich/decorated_surface.h"
#include "hilbert_teich/triangulation.h"

namespace hilbert_teich {

// 1/2 (sup log f(v1)/f(v2) + sup log f(v2)/f(v1)) over the cyclic triangle
// functionals f of gamma.  Only the triangle functionals enter; the
// nonnegativity facets of the lamination cone do not.  Works on any vectors
// with all functionals positive (so lamination-side vectors can be fed in);
// otherwise throws InvalidInputError whose index() is the triangle.
double HilbertDistance(const PreferredTriangulation& gamma,
                       std::span<const double> v1, std::span<const double> v2);

// Same on validated length vectors, whose functionals are >= 2 rho0.
double HilbertDistance(const PreferredTriangulation& gamma,
                       const TruncatedLengthVector& v1,
                       const TruncatedLengthVector& v2);

// The corner-length form: the same supremum taken over the corner lengths of
// every triangle.
double CornerFormDistance(const TruncatedLengthVector& v1,
                          const TruncatedLengthVector& v2);

// BirkhoffDistance on HyperplaneFunctionals(gamma).
double ConePathDistance(const PreferredTriangulation& gamma,
                        std::span<const double> v1,
                        std::span<const double> v2);

// max{1/2 sup log l(X0) - log rho0, 1/2 sup l(X0) + 1/2 log 2}.
double ODistConstant(const TruncatedLengthVector& v0);

// d(v0, v) - 1/2 sup log l(v); bounded in absolute value by
// ODistConstant(v0).
double RadialComparison(const TruncatedLengthVector& v0,
                        const TruncatedLengthVector& v);

struct FlipComparisonRow {
  double d_gamma;
  double d_gamma_prime;
  double diff;  // |d_gamma - d_gamma_prime|
};

struct FlipComparisonReport {
  int flipped_arc = -1;
  double max_difference = 0;
  // C_Gamma + C_Gamma' + 1/2 log 2.
  double ceiling = 0;
  std::vector<FlipComparisonRow> rows;
};

// Compares d^Gamma(X0, X) with d^Gamma'(X0, X) for Gamma' a flip of Gamma.
// Samples and v0 are length vectors on gamma; their gamma_prime versions
// come from the Ptolemy relation.  Throws InvalidInputError if gamma_prime
// is not gamma with one arc flipped (the other arc names must match).
FlipComparisonReport FlipComparison(
    const PreferredTriangulation& gamma,
    const PreferredTriangulation& gamma_prime,
    const TruncatedLengthVector& v0,
    std::span<const TruncatedLengthVector> samples);

}  // namespace hilbert_teich

#endif  // HILBERT_TEICH_TEICH_HILBERT_H_
