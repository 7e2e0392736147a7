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

#include "hilbert_teich/decorated_surface.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "hilbert_teich/errors.h"
#include "hilbert_teich/words.h"

namespace hilbert_teich {

namespace {

// log(e^x + e^y)
double LogAddExp(double x, double y) {
  const double m = std::max(x, y);
  return m + std::log1p(std::exp(-std::fabs(x - y)));
}

// Lengths of the arcs 1/0, 0/1, 1/1.
std::array<double, 3> BaseLengths(const MarkedStructure& x) {
  const TraceTriple t = x.Traces();
  const double markov = t.x * t.x + t.y * t.y + t.z * t.z;
  if (std::fabs(markov - t.x * t.y * t.z) > 1e-6 * t.x * t.y * t.z) {
    throw InvalidInputError("trace triple is not a Markov triple");
  }
  // lambda = kappa (x, y, z) with the six corner horocycles summing to h0:
  // 2 (a^2 + b^2 + c^2) / (abc) = h0.
  const double budget = 2 * markov / (t.x * t.y * t.z);
  const double log_kappa = std::log(budget) + x.rho0();
  return {2 * (log_kappa + std::log(t.x)), 2 * (log_kappa + std::log(t.y)),
          2 * (log_kappa + std::log(t.z))};
}

// Stern-Brocot descent.  The state is a triangle of slopes u, v, u + v with
// det(u, v) = 1 and their lengths; flipping v gives 2u + v, flipping u gives
// u + 2v, each by the Ptolemy relation with doubled sides.
double LengthFromBase(const std::array<double, 3>& base, const Slope& s) {
  const int64_t p = s.p(), q = s.q();
  if (p == 1 && q == 0) return base[0];
  if (p == 0 && q == 1) return base[1];
  if (p == 1 && q == 1) return base[2];
  int64_t up, uq, vp, vq;
  double lu, lv, lw;
  if (p > 0) {
    up = 1, uq = 0, vp = 0, vq = 1;
    lu = base[0], lv = base[1], lw = base[2];
  } else {
    // Slopes in the second quadrant start from u = 0/1, v = -1/0; the arc
    // -1/1 is the flip of 1/1 in the base triangulation.
    up = 0, uq = 1, vp = -1, vq = 0;
    lu = base[1], lv = base[0];
    lw = 2 * LogAddExp(base[0], base[1]) - base[2];
  }
  while (true) {
    const int64_t wp = up + vp, wq = uq + vq;
    if (wp == p && wq == q) return lw;
    if (Det(p, q, wp, wq) > 0) {
      // s lies between u and w.
      const double next = 2 * LogAddExp(lu, lw) - lv;
      vp = wp, vq = wq;
      lv = lw;
      lw = next;
    } else {
      const double next = 2 * LogAddExp(lw, lv) - lu;
      up = wp, uq = wq;
      lu = lw;
      lw = next;
    }
  }
}

}  // namespace

double SlopeTrace(const TraceTriple& t, const Slope& s) {
  // The Ptolemy relation is homogeneous, so the length descent runs on
  // 2 log |tr| as well.
  return std::exp(0.5 * LengthFromBase({2 * std::log(t.x), 2 * std::log(t.y),
                                        2 * std::log(t.z)},
                                       s));
}

namespace {

int64_t Gcd(int64_t a, int64_t b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    const int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

MarkedStructure::MarkedStructure(const Mobius& a, const Mobius& b,
                                 double rho0)
    : a_(a), b_(b), rho0_(rho0) {
  if (!(rho0 > 0) || !std::isfinite(rho0)) {
    throw InvalidInputError("rho0 must be positive");
  }
  for (const Mobius* m : {&a_, &b_}) {
    if (std::fabs(m->Det() - 1) >
        1e-9 * std::max(1.0, m->MaxAbsEntry() * m->MaxAbsEntry())) {
      throw InvalidInputError("holonomy generator is not in SL(2, R)");
    }
  }
  if (CommutatorDefect() > 1e-9) {
    throw InvalidInputError("commutator trace is not -2: structure is not a "
                            "complete once-punctured torus");
  }
  const TraceTriple t = Traces();
  if (!(t.x > 2) || !(t.y > 2) || !(t.z > 2)) {
    throw InvalidInputError("A, B and AB must all be hyperbolic");
  }
  // Corner check on the base triangle 1/0, 0/1, 1/1 (both triangles have
  // the same corners).
  const std::array<double, 3> l = BaseLengths(*this);
  for (int r = 0; r < 3; ++r) {
    const double corner = 0.5 * (l[r] - l[(r + 1) % 3] + l[(r + 2) % 3]);
    if (corner < rho0_ - 1e-12) {
      throw InvariantViolation("corner length " + std::to_string(corner) +
                                   " below rho0 in triangle 0",
                               0);
    }
  }
}

MarkedStructure MarkedStructure::ModularTorus(double rho0) {
  return MarkedStructure(Mobius::Raw(1, 1, 1, 2), Mobius::Raw(1, -1, -1, 2),
                         rho0);
}

MarkedStructure MarkedStructure::FromTraceTriple(double x, double y, double z,
                                                 double rho0) {
  if (!(x > 2) || !(y > 2) || !(z > 2)) {
    throw InvalidInputError("traces must exceed 2");
  }
  if (std::fabs(x * x + y * y + z * z - x * y * z) > 1e-6 * x * y * z) {
    throw InvalidInputError("trace triple is not a Markov triple");
  }
  // A = [[x, -1], [1, 0]], B = [[0, s], [-1/s, y]] with s + 1/s = z gives
  // tr AB = z.
  const double s = 0.5 * (z + std::sqrt(z * z - 4));
  return MarkedStructure(Mobius::Raw(x, -1, 1, 0),
                         Mobius::Raw(0, s, -1 / s, y), rho0);
}

double MarkedStructure::horocycle_budget() const { return std::exp(-rho0_); }

TraceTriple MarkedStructure::Traces() const {
  return {std::fabs(a_.Trace()), std::fabs(b_.Trace()),
          std::fabs((a_ * b_).Trace())};
}

double MarkedStructure::AbsTrace(const Slope& s) const {
  return SlopeTrace(Traces(), s);
}

double MarkedStructure::CurveLength(const Slope& s) const {
  return 2 * std::acosh(0.5 * AbsTrace(s));
}

double MarkedStructure::CommutatorDefect() const {
  const Mobius k = a_ * b_ * a_.Inverse() * b_.Inverse();
  const double na = a_.MaxAbsEntry(), nb = b_.MaxAbsEntry();
  return std::fabs(k.Trace() + 2) / std::max(1.0, na * na * nb * nb);
}

std::vector<Slope> ArcSlopes(const PreferredTriangulation& gamma) {
  std::vector<Slope> out;
  for (int e = 0; e < gamma.arc_count(); ++e) {
    std::optional<Slope> s = Slope::Parse(gamma.arcs()[e]);
    if (!s) {
      throw InvalidInputError("arc name " + gamma.arcs()[e] +
                                  " is not a slope label p/q",
                              e);
    }
    out.push_back(*s);
  }
  return out;
}

PreferredTriangulation FlipSlopeLabelled(const PreferredTriangulation& gamma,
                                         int arc) {
  const std::vector<Slope> slopes = ArcSlopes(gamma);
  const std::array<int, 4> sides = gamma.QuadrilateralSides(arc);
  const Slope& u = slopes[sides[0]];
  const Slope& v = slopes[sides[1]];
  const Slope& old = slopes[arc];
  // The two diagonals of the quadrilateral with sides u, v are u +/- v.
  int64_t p = u.p() + v.p(), q = u.q() + v.q();
  if (Gcd(p, q) == 1 && Slope(p, q) == old) {
    p = u.p() - v.p();
    q = u.q() - v.q();
  }
  return gamma.Flip(arc, Slope(p, q).ToString());
}

TruncatedLengthVector::TruncatedLengthVector(PreferredTriangulation gamma,
                                             std::vector<double> lengths,
                                             double rho0)
    : gamma_(std::move(gamma)), lengths_(std::move(lengths)), rho0_(rho0) {
  if (static_cast<int>(lengths_.size()) != gamma_.arc_count()) {
    throw InvalidInputError("length vector size does not match arc count");
  }
  for (const TriangleFunctional& f : CyclicFunctionals(gamma_)) {
    const double value = f.Evaluate(lengths_);
    if (!(value >= 2 * rho0_ - 1e-9)) {
      throw InvariantViolation("triangle " + std::to_string(f.triangle) +
                                   " has functional value " +
                                   std::to_string(value) + " < 2 rho0",
                               f.triangle);
    }
  }
}

double ArcLength(const MarkedStructure& x, const Slope& s) {
  return LengthFromBase(BaseLengths(x), s);
}

TruncatedLengthVector LengthVector(const MarkedStructure& x,
                                   const PreferredTriangulation& gamma) {
  const std::array<double, 3> base = BaseLengths(x);
  std::vector<double> lengths;
  for (const Slope& s : ArcSlopes(gamma)) {
    lengths.push_back(LengthFromBase(base, s));
  }
  return TruncatedLengthVector(gamma, std::move(lengths), x.rho0());
}

double HalfPlaneArcLength(const MarkedStructure& x, const Slope& s) {
  const Mobius k = x.a() * x.b() * x.a().Inverse() * x.b().Inverse();
  // Move the parabolic fixed point to infinity, read off the translation
  // there, and place the horoball whose horocycle has length h0.
  Mobius to_infinity;
  if (k.c() != 0) {
    const double p = (k.a() - k.d()) / (2 * k.c());
    to_infinity = Mobius::Raw(0, -1, 1, -p);
  }
  const Mobius conj = to_infinity * k * to_infinity.Inverse();
  const double translation = std::fabs(conj.b() / conj.d());
  const DecoratedCusp at_infinity{IdealPoint::Infinity(),
                                  translation / x.horocycle_budget()};
  const DecoratedCusp cusp = ApplyMobius(to_infinity.Inverse(), at_infinity);
  const Mobius w = EvaluateWord(SlopeWord(s), x.a(), x.b());
  return TruncatedLength(cusp, ApplyMobius(w, cusp));
}

std::vector<double> HalfPlaneLengthVector(
    const MarkedStructure& x, const PreferredTriangulation& gamma) {
  std::vector<double> out;
  for (const Slope& s : ArcSlopes(gamma)) {
    out.push_back(HalfPlaneArcLength(x, s));
  }
  return out;
}

std::array<double, 3> CornerLengths(const TruncatedLengthVector& v,
                                    int triangle) {
  const auto& triangles = v.triangulation().triangles();
  if (triangle < 0 || triangle >= static_cast<int>(triangles.size())) {
    throw InvalidInputError("triangle index out of range", triangle);
  }
  const TriangleSides& t = triangles[triangle];
  const double li = v[t[0]], lj = v[t[1]], lk = v[t[2]];
  const std::array<double, 3> corners = {0.5 * (li - lj + lk),
                                         0.5 * (lj - lk + li),
                                         0.5 * (lk - li + lj)};
  for (double c : corners) {
    if (c < v.rho0() - 1e-9) {
      throw InvariantViolation("corner length " + std::to_string(c) +
                                   " below rho0 in triangle " +
                                   std::to_string(triangle),
                               triangle);
    }
  }
  return corners;
}

double HorocycleBudget(const TruncatedLengthVector& v) {
  double sum = 0;
  for (int t = 0; t < static_cast<int>(v.triangulation().triangles().size());
       ++t) {
    for (double c : CornerLengths(v, t)) sum += std::exp(-c);
  }
  return sum;
}

double PtolemyFlipLength(double l_alpha, double l1, double l2, double l3,
                         double l4) {
  return 2 * LogAddExp(0.5 * (l1 + l3), 0.5 * (l2 + l4)) - l_alpha;
}

std::vector<double> FlipLengths(const PreferredTriangulation& gamma, int arc,
                                std::span<const double> v) {
  const std::array<int, 4> q = gamma.QuadrilateralSides(arc);
  std::vector<double> out(v.begin(), v.end());
  out[arc] = PtolemyFlipLength(v[arc], v[q[0]], v[q[1]], v[q[2]], v[q[3]]);
  return out;
}

MarkedStructure RandomStructure(Rng& rng, double rho0, double spread) {
  const double a = std::exp(rng.Uniform(-spread, spread));
  const double b = std::exp(rng.Uniform(-spread, spread));
  const double c = 1;
  const double s = a * a + b * b + c * c;
  return MarkedStructure::FromTraceTriple(s / (b * c), s / (a * c),
                                          s / (a * b), rho0);
}

}  // namespace hilbert_teich
