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

// Upper half-plane primitives: Mobius maps, horoball-decorated cusps,
// truncated and lambda lengths, axes and translations along them.

#ifndef HILBERT_TEICH_HYPERBOLIC_H_
#define HILBERT_TEICH_HYPERBOLIC_H_

#include <array>
#include <complex>
#include <utility>

namespace hilbert_teich {

// A point of R u {infinity}.
class IdealPoint {
 public:
  static IdealPoint Infinity() { return IdealPoint(0.0, true); }
  static IdealPoint At(double x) { return IdealPoint(x, false); }

  bool is_infinite() const { return infinite_; }
  // Only meaningful for finite points.
  double x() const { return x_; }

  bool operator==(const IdealPoint& o) const {
    return infinite_ == o.infinite_ && (infinite_ || x_ == o.x_);
  }

 private:
  IdealPoint(double x, bool infinite) : x_(x), infinite_(infinite) {}
  double x_;
  bool infinite_;
};

// z -> (a z + b) / (c z + d) with ad - bc = 1.
class Mobius {
 public:
  Mobius() : m_{1, 0, 0, 1} {}

  // Throws InvalidInputError unless ad - bc > 0; a determinant off by more
  // than 1e-12 is rescaled to 1.
  static Mobius FromEntries(double a, double b, double c, double d);
  // Same, but the caller promises det = 1 already (no check).
  static Mobius Raw(double a, double b, double c, double d) {
    Mobius m;
    m.m_ = {a, b, c, d};
    return m;
  }
  static Mobius Identity() { return Mobius(); }

  double a() const { return m_[0]; }
  double b() const { return m_[1]; }
  double c() const { return m_[2]; }
  double d() const { return m_[3]; }

  double Trace() const { return m_[0] + m_[3]; }
  double Det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  // Largest absolute entry.
  double MaxAbsEntry() const;

  // The product renormalizes by sqrt(det) when drift exceeds 1e-12 and the
  // determinant is resolvable at the entries' scale.
  Mobius operator*(const Mobius& o) const;
  Mobius Inverse() const { return Raw(m_[3], -m_[1], -m_[2], m_[0]); }
  Mobius Negated() const { return Raw(-m_[0], -m_[1], -m_[2], -m_[3]); }

  IdealPoint Apply(const IdealPoint& z) const;
  std::complex<double> Apply(std::complex<double> z) const;

 private:
  std::array<double, 4> m_;
};

// A cusp with a horoball.  For a finite base point `size` is the Euclidean
// diameter of the tangent horoball; at infinity it is the height of the
// horizontal boundary line.
struct DecoratedCusp {
  IdealPoint base = IdealPoint::Infinity();
  double size = 1;
};

// Throws InvalidInputError if size <= 0.
DecoratedCusp MakeCusp(IdealPoint base, double size);

// Oriented geodesic between two distinct ideal points.
struct Geodesic {
  IdealPoint from = IdealPoint::At(0);
  IdealPoint to = IdealPoint::Infinity();
};

// Image of a decorated cusp.  A horoball at infinity of height H goes to the
// horoball at a/c of diameter 1/(c^2 H); a finite horoball of diameter D at p
// goes to diameter D/(cp + d)^2, or to height 1/(c^2 D) if p is sent to
// infinity.
DecoratedCusp ApplyMobius(const Mobius& m, const DecoratedCusp& cusp);

// Signed length of the geodesic segment between the two horocycles:
// log((p - q)^2 / (d_p d_q)) for finite cusps, log(H / d_p) against a cusp
// at infinity of height H.  Overlapping horoballs give negative values.
// Throws InvalidInputError for equal base points.
double TruncatedLength(const DecoratedCusp& c1, const DecoratedCusp& c2);

// exp(TruncatedLength / 2).
double LambdaLength(const DecoratedCusp& c1, const DecoratedCusp& c2);

// Axis of a hyperbolic element, oriented from the repelling to the
// attracting fixed point, and its translation length 2 arccosh(|tr|/2).
// Throws InvalidInputError when |tr| <= 2.
std::pair<Geodesic, double> AxisAndTranslationLength(const Mobius& m);

// E_t: translation by t along the axis of m, in m's direction, so that E_l is
// +/- m for l the translation length and E_s E_t = E_{s+t}.  Throws
// InvalidInputError when m is not hyperbolic.
Mobius TranslationAlongAxis(const Mobius& m, double t);

// The traceless unit generator N of m's one-parameter group: N^2 = I and
// E_t = cosh(t/2) I + sinh(t/2) N.  Throws when m is not hyperbolic.
Mobius AxisGenerator(const Mobius& m);

// Hyperbolic distance between two points of the upper half-plane.
double HyperbolicDistance(std::complex<double> z, std::complex<double> w);

// exp(log_scale) * m, with m normalized so that its largest entry has
// absolute value 1.  Products stay representable far past the double range,
// which the earthquake flow needs at large amplitudes.
class LogScaledMatrix {
 public:
  LogScaledMatrix() : log_scale_(0), m_{1, 0, 0, 1} {}
  explicit LogScaledMatrix(const Mobius& m);
  // exp(log_scale) * [[a, b], [c, d]].
  LogScaledMatrix(double log_scale, double a, double b, double c, double d);

  LogScaledMatrix operator*(const LogScaledMatrix& o) const;
  // log |trace|; -infinity when the trace vanishes.
  double LogAbsTrace() const;
  double log_scale() const { return log_scale_; }

 private:
  void Normalize();
  double log_scale_;
  std::array<double, 4> m_;
};

// E_t in log-scaled form, exact for any real t:
//   E_t = e^{|t|/2}/2 [(I + sgn(t) N) + e^{-|t|} (I - sgn(t) N)].
LogScaledMatrix ScaledTranslation(const Mobius& generator, double t);

}  // namespace hilbert_teich

#endif  // HILBERT_TEICH_HYPERBOLIC_H_
