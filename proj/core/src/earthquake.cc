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

#include "hilbert_teich/earthquake.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "hilbert_teich/errors.h"
#include "hilbert_teich/words.h"

namespace hilbert_teich {

namespace {

double Scale(const std::vector<double>& v) {
  double s = 1;
  for (double x : v) s = std::max(s, std::fabs(x));
  return s;
}

const WeightedMulticurve::Component& OnlyComponent(
    const WeightedMulticurve& mu) {
  if (mu.components().size() != 1) {
    throw InvalidInputError("a ray needs exactly one curve");
  }
  return mu.components()[0];
}

}  // namespace

MarkedStructure Earthquake(const MarkedStructure& x, const Slope& alpha,
                           double weight, double t) {
  const IntMatrix2 g = BasisMatrixFor(alpha);
  if (g.Det() != 1) throw InternalError("basis change is not unimodular");
  const FreeAutomorphism to_alpha = FreeAutomorphism::Realizing(g);
  const IntMatrix2 back = g.InverseUnimodular();
  const Mobius a1 = EvaluateWord(to_alpha.image_a(), x.a(), x.b());
  const Mobius b1 = EvaluateWord(to_alpha.image_b(), x.a(), x.b());
  // B' becomes T B' with T = cosh(wt/2) I - sinh(wt/2) N, N the axis
  // generator of A'.  Only traces are needed: tr(T M) is linear in tr M and
  // tr(N M), and the rest follows by Farey descent.  Multiplying out the
  // back-substitution words instead cancels entries of size exp(w t).
  const Mobius n = AxisGenerator(a1);
  const double ch = std::cosh(0.5 * weight * t);
  const double sh = std::sinh(0.5 * weight * t);
  const TraceTriple twisted{
      std::fabs(a1.Trace()),
      std::fabs(ch * b1.Trace() - sh * (n * b1).Trace()),
      std::fabs(ch * (a1 * b1).Trace() - sh * (a1 * n * b1).Trace())};
  double traces[3];
  const Slope basis[] = {Slope(1, 0), Slope(0, 1), Slope(1, 1)};
  for (int k = 0; k < 3; ++k) {
    traces[k] = SlopeTrace(twisted, Apply(back, basis[k]));
    if (!std::isfinite(traces[k])) {
      throw InvalidInputError("earthquake amplitude overflows the holonomy");
    }
  }
  return MarkedStructure::FromTraceTriple(traces[0], traces[1], traces[2],
                                          x.rho0());
}

EarthquakeFlow::EarthquakeFlow(const MarkedStructure& x, const Slope& alpha,
                               double weight)
    : x_(x), alpha_(alpha), weight_(weight) {
  if (!(weight > 0) || !std::isfinite(weight)) {
    throw InvalidInputError("earthquake weight must be positive");
  }
  const IntMatrix2 g = BasisMatrixFor(alpha);
  g_inverse_ = g.InverseUnimodular();
  const FreeAutomorphism to_alpha = FreeAutomorphism::Realizing(g);
  const Mobius a1 = EvaluateWord(to_alpha.image_a(), x.a(), x.b());
  a_ = LogScaledMatrix(a1);
  a_inv_ = LogScaledMatrix(a1.Inverse());
  b_ = EvaluateWord(to_alpha.image_b(), x.a(), x.b());
  generator_ = AxisGenerator(a1);
}

double EarthquakeFlow::ArcLength(const Slope& s, double t) const {
  const Slope local = Apply(g_inverse_, s);
  const double tau = weight_ * t;
  const LogScaledMatrix b =
      ScaledTranslation(generator_, -tau) * LogScaledMatrix(b_);
  const LogScaledMatrix b_inv =
      LogScaledMatrix(b_.Inverse()) * ScaledTranslation(generator_, tau);
  const double log_trace =
      EvaluateWord(SlopeWord(local), a_, a_inv_, b, b_inv).LogAbsTrace();
  // lambda_s = 2 exp(rho0) |tr| once the horocycle budget is closed.
  return 2 * (x_.rho0() + std::log(2.0) + log_trace);
}

std::vector<double> EarthquakeFlow::Lengths(const PreferredTriangulation& gamma,
                                            double t) const {
  std::vector<double> out;
  for (const Slope& s : ArcSlopes(gamma)) out.push_back(ArcLength(s, t));
  return out;
}

TruncatedLengthVector EarthquakeFlow::LengthVector(
    const PreferredTriangulation& gamma, double t) const {
  return TruncatedLengthVector(gamma, Lengths(gamma, t), x_.rho0());
}

double LengthDefect(const EarthquakeFlow& flow, const Slope& s, double t) {
  const double i = static_cast<double>(IntersectionNumber(flow.alpha(), s));
  return flow.ArcLength(s, t) - std::fabs(t) * flow.weight() * i;
}

double LengthDefect(const MarkedStructure& x, const Slope& alpha,
                    double weight, const Slope& s, double t) {
  return LengthDefect(EarthquakeFlow(x, alpha, weight), s, t);
}

double DerivativeCheck(const EarthquakeFlow& flow, const Slope& s, double t,
                       double h) {
  return (flow.ArcLength(s, t + h) - flow.ArcLength(s, t - h)) / (2 * h);
}

std::vector<LimitEstimate> EstimateLimits(const MarkedStructure& x,
                                          const WeightedMulticurve& mu,
                                          const PreferredTriangulation& gamma,
                                          double horizon, double tol,
                                          double max_horizon) {
  const std::vector<Slope> arcs = ArcSlopes(gamma);
  std::vector<LimitEstimate> out;
  if (mu.empty()) {
    const TruncatedLengthVector v = LengthVector(x, gamma);
    for (double l : v.lengths()) out.push_back({l, l, l, 0});
    return out;
  }
  if (mu.components().size() != 1) {
    throw InvalidInputError("earthquakes are implemented for one curve");
  }
  const auto& c = mu.components()[0];
  const EarthquakeFlow flow(x, c.slope, c.weight);
  const std::vector<double> base = LengthVector(x, gamma).lengths();
  for (size_t e = 0; e < arcs.size(); ++e) {
    const Slope& s = arcs[e];
    if (IntersectionNumber(c.slope, s) == 0) {
      // The earthquake does not move these arcs.
      const double l = base[e];
      out.push_back({l, l, l, 0});
      continue;
    }
    double t = horizon;
    double upper = LengthDefect(flow, s, t);
    double lower = LengthDefect(flow, s, 2 * t);
    while (std::fabs(upper - lower) >= tol) {
      t *= 2;
      if (2 * t > max_horizon) {
        throw HorizonExceededError(
            "limit bracket for arc " + s.ToString() + " did not close",
            std::fabs(upper - lower));
      }
      upper = lower;
      lower = LengthDefect(flow, s, 2 * t);
    }
    // f decreases, but at the bracket width rounding can swap the ends.
    out.push_back({upper, std::min(lower, upper), std::max(lower, upper), t});
  }
  return out;
}

std::vector<TriangleType> TriangleTypes(const PreferredTriangulation& gamma,
                                        const std::vector<double>& i_vector) {
  const double eps = 1e-12 * Scale(i_vector);
  std::vector<TriangleType> out;
  for (int t = 0; t < static_cast<int>(gamma.triangles().size()); ++t) {
    int meeting = 0;
    for (int e : gamma.triangles()[t]) meeting += i_vector[e] > eps;
    switch (meeting) {
      case 0: out.push_back(TriangleType::kA); break;
      case 2: out.push_back(TriangleType::kB); break;
      case 3: out.push_back(TriangleType::kC); break;
      default:
        throw InternalError("triangle " + std::to_string(t) +
                            " meets the lamination in exactly one side");
    }
  }
  return out;
}

RayConstants ComputeRayConstants(const PreferredTriangulation& gamma,
                                 const std::vector<double>& base_lengths,
                                 const std::vector<double>& i_vector,
                                 const std::vector<double>& limits) {
  const double eps = 1e-12 * Scale(i_vector);
  RayConstants out;
  double d = std::numeric_limits<double>::infinity();
  double d_bar = -std::numeric_limits<double>::infinity();
  for (const TriangleFunctional& f : CyclicFunctionals(gamma)) {
    const TriangleSides& sides = gamma.triangles()[f.triangle];
    double meets = 0;
    for (int e : sides) meets += i_vector[e];
    const double i_value = f.Evaluate(i_vector);
    const double l_value = f.Evaluate(base_lengths);
    if (std::fabs(i_value) <= eps && meets > eps) {
      const double c_value = f.Evaluate(limits);
      if (!(c_value > 0)) out.nonpositive_numerators.push_back(f.triangle);
      d = std::min(d, c_value / l_value);
    } else if (i_value > eps) {
      d_bar = std::max(d_bar, i_value / l_value);
    }
  }
  if (std::isinf(d)) {
    out.d = 1;
    out.d_fallback = true;
  } else {
    out.d = d;
  }
  out.d_bar = d_bar;
  return out;
}

EarthquakeRay::EarthquakeRay(const MarkedStructure& x0,
                             const WeightedMulticurve& mu,
                             const PreferredTriangulation& gamma)
    : mu_(mu),
      gamma_(gamma),
      flow_(x0, OnlyComponent(mu).slope, OnlyComponent(mu).weight) {
  limits_ = EstimateLimits(x0, mu_, gamma_, 8, 1e-10);
  std::vector<double> c;
  for (const LimitEstimate& e : limits_) c.push_back(e.value);
  constants_ = ComputeRayConstants(
      gamma_, LengthVector(x0, gamma_).lengths(),
      IntersectionVector(mu_, gamma_), c);
  if (!(constants_.d > 0) || !constants_.nonpositive_numerators.empty()) {
    throw InvariantViolation("ray constant d is not positive",
                             constants_.nonpositive_numerators.empty()
                                 ? -1
                                 : constants_.nonpositive_numerators[0]);
  }
  if (!(constants_.d_bar > 0)) {
    throw InvariantViolation("ray constant dbar is not positive");
  }
}

double EarthquakeRay::Amplitude(double s) const {
  return constants_.d / constants_.d_bar * std::exp(2 * s);
}

double EarthquakeRay::ParameterAt(double amplitude) const {
  return 0.5 * std::log(amplitude * constants_.d_bar / constants_.d);
}

TruncatedLengthVector EarthquakeRay::Point(double s) const {
  if (s == 0) return LengthVector(flow_.base(), gamma_);
  return flow_.LengthVector(gamma_, Amplitude(s));
}

double AlmostGeodesicDefect(const EarthquakeRay& ray,
                            const DistanceFunction& distance, double s,
                            double t) {
  if (!(0 <= s && s <= t)) {
    throw InvalidInputError("almost-geodesic defect needs 0 <= s <= t");
  }
  const TruncatedLengthVector p0 = ray.Point(0);
  const TruncatedLengthVector ps = ray.Point(s);
  const TruncatedLengthVector pt = ray.Point(t);
  return std::fabs(distance(p0, ps) + distance(ps, pt) - t);
}

double ProjectiveGap(const std::vector<double>& v,
                     const std::vector<double>& a) {
  if (v.size() != a.size()) {
    throw InvalidInputError("vectors have different lengths");
  }
  double sv = 0, sa = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    sv += v[i];
    sa += a[i];
  }
  double gap = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    gap = std::max(gap, std::fabs(v[i] / sv - a[i] / sa));
  }
  return gap;
}

}  // namespace hilbert_teich
