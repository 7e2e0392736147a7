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

// Decorated ideal quadrilaterals: shearing along a diagonal and the corner
// lengths on both sides of a diagonal flip.
//
// Vertices O1..O4 (indices 0..3) are in counterclockwise order.  Sides are
// eta_1 = O4O1, eta_2 = O1O2, eta_3 = O2O3, eta_4 = O3O4.  The diagonal
// alpha = O2O4 splits Q into D1 = O1O2O4 and D2 = O2O3O4; the flip replaces
// it by beta = O1O3.

#ifndef HILBERT_TEICH_QUADRILATERAL_H_
#define HILBERT_TEICH_QUADRILATERAL_H_

#include <array>

#include "hilbert_teich/hyperbolic.h"
#include "hilbert_teich/random.h"

namespace hilbert_teich {

using DecoratedQuadrilateral = std::array<DecoratedCusp, 4>;

enum class Diagonal {
  kAlpha,  // O2O4
  kBeta,   // O1O3
};

// Shearing along a diagonal.  For alpha the Mobius map with O1 -> 0, O2 -> 1,
// O4 -> infinity sends O3 to 1 + R, and shr = log R; beta is the same after
// relabelling O2, O3, O4, O1 as O1..O4.  Only the base points are used.
// Throws InvalidInputError on repeated points, or if the points are not in
// circular order.
double Shearing(const DecoratedQuadrilateral& quad, Diagonal which);

// Corner lengths of a decorated quadrilateral before and after flipping alpha.
// corner[i][0] is l_{i1}, the corner at the start of eta_{i+1} (O_i, with O_0
// read as O4); corner[i][1] is l_{i2}, at its end.  Each is measured in the
// triangle that contains the side: D1, D2 before the flip, O1O2O3 and O3O4O1
// after.
struct FlipCorners {
  std::array<std::array<double, 2>, 4> before;
  std::array<std::array<double, 2>, 4> after;
  double shear;  // shr(alpha) = log R
  double r;      // R
};
FlipCorners AnalyzeDiagonalFlip(const DecoratedQuadrilateral& quad);

// Worst-case deviations of the flip bounds over one quadrilateral.  For sides
// 1 and 3: |l'_{i1} - l_{i1} + shr| and |l'_{i2} - l_{i2} - shr|; for sides 2
// and 4: |l'_{i1} - l_{i1}| and |l'_{i2} - l_{i2}|.  Each is at most log 2
// when l_{11} >= l_{42}.
struct FlipBoundDeviations {
  double start_shift;    // |l'_{i1} - l_{i1} + shr|, i = 1, 3
  double end_shift;      // |l'_{i2} - l_{i2} - shr|, i = 1, 3
  double start_fixed;    // |l'_{i1} - l_{i1}|, i = 2, 4
  double end_fixed;      // |l'_{i2} - l_{i2}|, i = 2, 4
  double end_shift_cross;  // |l'_{i2} - l_{i1} - shr|, i = 1, 3
  double exact_l42;      // |l'_{42} - log(e^{l_{42}} R / (1 + R))|
};
FlipBoundDeviations MeasureFlipBounds(const FlipCorners& corners);

// Four random ideal points in [-5, 5] in increasing order with horoball
// diameters log-uniform in [e^-4, e]; labels are rotated once if needed so
// that l_{11} >= l_{42} (equivalently R >= 1).
DecoratedQuadrilateral RandomDecoratedQuadrilateral(Rng& rng);

}  // namespace hilbert_teich

#endif  // HILBERT_TEICH_QUADRILATERAL_H_
