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

// Earthquakes (twist flows) along weighted simple closed curves on S_{1,1},
// the length defects f_i(t) = l_i(E^t X) - t i(mu, eta_i), their limits, and
// the reparametrized rays s -> E^{(d / dbar) exp(2s)} X.
//
// Sign convention: E^t replaces the alpha-adapted generator B' by
// E_{-w t} B', where E_s translates along the axis of A' = hol(alpha) in
// A's own direction.  At w t = l_alpha(X) this is the positive Dehn twist
// T_alpha = g [[1, 1], [0, 1]] g^-1 (g sends 1/0 to alpha) acting as in
// ActOnStructure.

#ifndef HILBERT_TEICH_EARTHQUAKE_H_
#define HILBERT_TEICH_EARTHQUAKE_H_

#include <functional>
#include <vector>

#include "hilbert_teich/decorated_surface.h"
#include "hilbert_teich/hyperbolic.h"
#include "hilbert_teich/laminations.h"
#include "hilbert_teich/slope.h"
#include "hilbert_teich/triangulation.h"

namespace hilbert_teich {

// E^t_{w alpha} X, rebuilt from the traces of A, B and AB.  Traces grow like
// exp(w t / 2), so this is for moderate amplitudes; EarthquakeFlow handles
// lengths at any amplitude.
MarkedStructure Earthquake(const MarkedStructure& x, const Slope& alpha,
                           double weight, double t);

// Lengths along t -> E^t_{w alpha} X, evaluated in log-scaled arithmetic so
// amplitudes far beyond the double range of the holonomy are fine.
class EarthquakeFlow {
 public:
  EarthquakeFlow(const MarkedStructure& x, const Slope& alpha, double weight);

  const MarkedStructure& base() const { return x_; }
  const Slope& alpha() const { return alpha_; }
  double weight() const { return weight_; }

  // Truncated length of the arc of slope s on E^t X.
  double ArcLength(const Slope& s, double t) const;
  std::vector<double> Lengths(const PreferredTriangulation& gamma,
                              double t) const;
  TruncatedLengthVector LengthVector(const PreferredTriangulation& gamma,
                                     double t) const;

 private:
  MarkedStructure x_;
  Slope alpha_;
  double weight_;
  IntMatrix2 g_inverse_;
  LogScaledMatrix a_, a_inv_;
  Mobius b_, generator_;
};

// f(t) = l_s(E^t X) - |t| w i(alpha, s).
double LengthDefect(const EarthquakeFlow& flow, const Slope& s, double t);
double LengthDefect(const MarkedStructure& x, const Slope& alpha,
                    double weight, const Slope& s, double t);

// Central difference (l(t + h) - l(t - h)) / 2h of l_s(E^t X).
double DerivativeCheck(const EarthquakeFlow& flow, const Slope& s, double t,
                       double h = 1e-4);

// Estimate of c = lim f(t).  The horizon T doubles until the bracket
// [f(2T), f(T)] is narrower than tol; value is f(T).
struct LimitEstimate {
  double value;
  double lower;
  double upper;
  double horizon;
};

// One estimate per arc of gamma.  An empty multicurve gives c_i = l_i(X).
// Throws HorizonExceededError if some bracket is still wider than tol at
// max_horizon, and InvalidInputError for multicurves with more than one
// component (impossible on S_{1,1} anyway).
std::vector<LimitEstimate> EstimateLimits(const MarkedStructure& x,
                                          const WeightedMulticurve& mu,
                                          const PreferredTriangulation& gamma,
                                          double horizon = 8,
                                          double tol = 1e-12,
                                          double max_horizon = 1e6);

enum class TriangleType { kA, kB, kC };

// A: no side meets mu; B: exactly two sides do; C: all three.  Throws
// InternalError if exactly one side meets mu.
std::vector<TriangleType> TriangleTypes(const PreferredTriangulation& gamma,
                                        const std::vector<double>& i_vector);

struct RayConstants {
  double d = 1;
  double d_bar = 0;
  // No cyclic functional vanishes on i(mu) inside a triangle meeting mu; d
  // was set to 1.
  bool d_fallback = false;
  // Triangles whose d_ijk numerator c_i - c_j + c_k was not positive.
  std::vector<int> nonpositive_numerators;
};

// d = min (c_i - c_j + c_k) / (l_i - l_j + l_k)(X0) over cyclic functionals
// vanishing on i(mu) in triangles that meet mu; dbar = max of
// (i_i - i_j + i_k) / (l_i - l_j + l_k)(X0) over functionals positive on
// i(mu).
RayConstants ComputeRayConstants(const PreferredTriangulation& gamma,
                                 const std::vector<double>& base_lengths,
                                 const std::vector<double>& i_vector,
                                 const std::vector<double>& limits);

// s -> E^{(d / dbar) exp(2s)}_mu X0 for s > 0, with the base point at s = 0.
class EarthquakeRay {
 public:
  // Estimates the limits and constants.  mu must have exactly one component.
  // Throws InvariantViolation if d <= 0.
  EarthquakeRay(const MarkedStructure& x0, const WeightedMulticurve& mu,
                const PreferredTriangulation& gamma);

  const MarkedStructure& base() const { return flow_.base(); }
  const WeightedMulticurve& curve() const { return mu_; }
  const PreferredTriangulation& triangulation() const { return gamma_; }
  const RayConstants& constants() const { return constants_; }
  const std::vector<LimitEstimate>& limits() const { return limits_; }
  const EarthquakeFlow& flow() const { return flow_; }

  double Amplitude(double s) const;
  // Inverse of Amplitude: s = 1/2 log(t dbar / d).
  double ParameterAt(double amplitude) const;
  // gamma(s); the base point for s == 0.
  TruncatedLengthVector Point(double s) const;

 private:
  WeightedMulticurve mu_;
  PreferredTriangulation gamma_;
  EarthquakeFlow flow_;
  std::vector<LimitEstimate> limits_;
  RayConstants constants_;
};

using DistanceFunction = std::function<double(const TruncatedLengthVector&,
                                              const TruncatedLengthVector&)>;

// |d(gamma(0), gamma(s)) + d(gamma(s), gamma(t)) - t| for 0 <= s <= t.
double AlmostGeodesicDefect(const EarthquakeRay& ray,
                            const DistanceFunction& distance, double s,
                            double t);

// max_i |v_i / sum(v) - a_i / sum(a)|: distance between projective classes.
double ProjectiveGap(const std::vector<double>& v,
                     const std::vector<double>& a);

}  // namespace hilbert_teich

#endif  // HILBERT_TEICH_EARTHQUAKE_H_
