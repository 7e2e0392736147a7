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

// Points of the Teichmuller space of the once-punctured torus and their
// truncated length coordinates.

#ifndef HILBERT_TEICH_DECORATED_SURFACE_H_
#define HILBERT_TEICH_DECORATED_SURFACE_H_

#include <array>
#include <span>
#include <vector>

#include "hilbert_teich/hyperbolic.h"
#include "hilbert_teich/random.h"
#include "hilbert_teich/slope.h"
#include "hilbert_teich/triangulation.h"

namespace hilbert_teich {

inline constexpr double kDefaultRho0 = 2.0;

// |tr A|, |tr B|, |tr AB|.
struct TraceTriple {
  double x, y, z;
};

// |tr| of the slope-s curve of a cusped holonomy whose A, B, AB have
// absolute traces t.  Computed by Farey descent on the traces alone
// (z z' = x^2 + y^2 across each flip), so no matrix products cancel.
double SlopeTrace(const TraceTriple& t, const Slope& s);

// A marked complete hyperbolic structure on S_{1,1}: holonomy images A, B of
// the generators a, b, plus the truncation height rho0.  The horocycle
// around the cusp of length h0 = exp(-rho0) truncates every arc.
class MarkedStructure {
 public:
  // Throws InvalidInputError unless rho0 > 0, tr[A, B] = -2 (to 1e-9 relative
  // to |A|^2 |B|^2, which is the resolution of the computed commutator) and
  // A, B, AB are hyperbolic.  Throws InvariantViolation naming the triangle
  // if a corner length of the base triangulation falls below rho0.
  MarkedStructure(const Mobius& a, const Mobius& b, double rho0);

  // A = [[1, 1], [1, 2]], B = [[1, -1], [-1, 2]]; traces (3, 3, 3).
  static MarkedStructure ModularTorus(double rho0 = kDefaultRho0);

  // The structure with these positive traces of A, B, AB.  Throws
  // InvalidInputError if x^2 + y^2 + z^2 = xyz fails by more than 1e-6
  // relative.
  static MarkedStructure FromTraceTriple(double x, double y, double z,
                                         double rho0 = kDefaultRho0);

  const Mobius& a() const { return a_; }
  const Mobius& b() const { return b_; }
  double rho0() const { return rho0_; }
  double horocycle_budget() const;

  TraceTriple Traces() const;
  // |tr| of the holonomy of the closed curve of slope s, as SlopeTrace of
  // Traces().  EvaluateWord(SlopeWord(s), a(), b()) gives the same value
  // while the entries stay moderate.
  double AbsTrace(const Slope& s) const;
  // Length of the closed geodesic of slope s: 2 arccosh(|tr|/2).
  double CurveLength(const Slope& s) const;
  // |tr[A, B] + 2| / max(1, |A|^2 |B|^2) with the max-entry norm.
  double CommutatorDefect() const;

 private:
  Mobius a_, b_;
  double rho0_;
};

// Arc slopes of a triangulation of S_{1,1} whose arc names are "p/q" labels.
// Throws InvalidInputError for a name that is not a slope.
std::vector<Slope> ArcSlopes(const PreferredTriangulation& gamma);

// Flip on a slope-labelled S_{1,1} triangulation; the new arc is named by its
// slope (u + v or u - v for the two other arcs u, v).
PreferredTriangulation FlipSlopeLabelled(const PreferredTriangulation& gamma,
                                         int arc);

// Truncated lengths l_{eta_i}(X), one per arc of a triangulation.
class TruncatedLengthVector {
 public:
  // Throws InvariantViolation naming the triangle if some cyclic functional
  // is below 2 rho0 (with 1e-9 slack), or InvalidInputError on a size
  // mismatch.
  TruncatedLengthVector(PreferredTriangulation gamma,
                        std::vector<double> lengths, double rho0);

  const PreferredTriangulation& triangulation() const { return gamma_; }
  const std::vector<double>& lengths() const { return lengths_; }
  double rho0() const { return rho0_; }
  size_t size() const { return lengths_.size(); }
  double operator[](size_t i) const { return lengths_[i]; }

 private:
  PreferredTriangulation gamma_;
  std::vector<double> lengths_;
  double rho0_;
};

// Truncated length of the arc of slope s.  The three base arcs 1/0, 0/1, 1/1
// get lambda lengths proportional to the traces (x, y, z) (the relations
// bc = S/x, ac = S/y, ab = S/z with S = a^2 + b^2 + c^2), scaled so that the
// six corner horocycles add up to h0.  Other slopes are reached by
// Stern-Brocot descent, one Ptolemy flip per step.
double ArcLength(const MarkedStructure& x, const Slope& s);

// ArcLength for every arc of a slope-labelled triangulation.  Throws
// InvalidInputError if the trace triple is not Markov to 1e-6.
TruncatedLengthVector LengthVector(const MarkedStructure& x,
                                   const PreferredTriangulation& gamma);

// Independent path: lift each arc to a pair of decorated cusps (P, W P) in
// the upper half-plane, with P the fixed point of [A, B] and W the slope
// word, and take the truncated length between them.
double HalfPlaneArcLength(const MarkedStructure& x, const Slope& s);
std::vector<double> HalfPlaneLengthVector(const MarkedStructure& x,
                                          const PreferredTriangulation& gamma);

// Corner lengths ((l_i - l_j + l_k)/2, (l_j - l_k + l_i)/2,
// (l_k - l_i + l_j)/2) of a triangle (i, j, k) of v's triangulation.  Throws
// InvariantViolation when a corner is below rho0.
std::array<double, 3> CornerLengths(const TruncatedLengthVector& v,
                                    int triangle);

// Sum over all triangle corners of exp(-corner length).
double HorocycleBudget(const TruncatedLengthVector& v);

// l_beta = 2 log((lambda_1 lambda_3 + lambda_2 lambda_4) / lambda_alpha),
// evaluated in the log domain.
double PtolemyFlipLength(double l_alpha, double l1, double l2, double l3,
                         double l4);

// The length vector in gamma.Flip(arc) obtained from v by Ptolemy.
std::vector<double> FlipLengths(const PreferredTriangulation& gamma, int arc,
                                std::span<const double> v);

// Random structure: lambda lengths of the base arcs are exp(u), exp(w), 1
// with u, w uniform in [-spread, spread].
MarkedStructure RandomStructure(Rng& rng, double rho0 = kDefaultRho0,
                                double spread = 1.5);

}  // namespace hilbert_teich

#endif  // HILBERT_TEICH_DECORATED_SURFACE_H_
