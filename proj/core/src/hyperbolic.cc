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

#include "hilbert_teich/hyperbolic.h"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <string>

#include "hilbert_teich/errors.h"

namespace hilbert_teich {

namespace {

constexpr double kDetDrift = 1e-12;

void RequireHyperbolic(const Mobius& m) {
  if (!(std::fabs(m.Trace()) > 2)) {
    throw InvalidInputError("element is not hyperbolic: |trace| = " +
                            std::to_string(std::fabs(m.Trace())));
  }
}

}  // namespace

Mobius Mobius::FromEntries(double a, double b, double c, double d) {
  const double det = a * d - b * c;
  if (!(det > 0) || !std::isfinite(det)) {
    throw InvalidInputError("Mobius entries need a positive determinant");
  }
  if (std::fabs(det - 1) > kDetDrift) {
    const double s = std::sqrt(det);
    return Raw(a / s, b / s, c / s, d / s);
  }
  return Raw(a, b, c, d);
}

double Mobius::MaxAbsEntry() const {
  double m = 0;
  for (double e : m_) m = std::max(m, std::fabs(e));
  return m;
}

Mobius Mobius::operator*(const Mobius& o) const {
  const double a = m_[0] * o.m_[0] + m_[1] * o.m_[2];
  const double b = m_[0] * o.m_[1] + m_[1] * o.m_[3];
  const double c = m_[2] * o.m_[0] + m_[3] * o.m_[2];
  const double d = m_[2] * o.m_[1] + m_[3] * o.m_[3];
  const double det = a * d - b * c;
  // The computed determinant only carries information above its own rounding
  // error, which grows with the entries.
  const double resolution = 8 * DBL_EPSILON * (std::fabs(a * d) +
                                               std::fabs(b * c));
  if (det > 0 && std::fabs(det - 1) > std::max(kDetDrift, resolution)) {
    const double s = std::sqrt(det);
    return Raw(a / s, b / s, c / s, d / s);
  }
  return Raw(a, b, c, d);
}

IdealPoint Mobius::Apply(const IdealPoint& z) const {
  if (z.is_infinite()) {
    if (c() == 0) return IdealPoint::Infinity();
    return IdealPoint::At(a() / c());
  }
  const double den = c() * z.x() + d();
  if (den == 0) return IdealPoint::Infinity();
  return IdealPoint::At((a() * z.x() + b()) / den);
}

std::complex<double> Mobius::Apply(std::complex<double> z) const {
  return (a() * z + b()) / (c() * z + d());
}

DecoratedCusp MakeCusp(IdealPoint base, double size) {
  if (!(size > 0) || !std::isfinite(size)) {
    throw InvalidInputError("horoball size must be positive and finite");
  }
  return DecoratedCusp{base, size};
}

DecoratedCusp ApplyMobius(const Mobius& m, const DecoratedCusp& cusp) {
  const double c = m.c();
  if (cusp.base.is_infinite()) {
    if (c == 0) {
      // z -> a^2 z + ab scales heights by a^2.
      return DecoratedCusp{IdealPoint::Infinity(), cusp.size * m.a() * m.a()};
    }
    return DecoratedCusp{IdealPoint::At(m.a() / c),
                         1.0 / (c * c * cusp.size)};
  }
  const double p = cusp.base.x();
  const double den = c * p + m.d();
  if (den == 0) {
    return DecoratedCusp{IdealPoint::Infinity(), 1.0 / (c * c * cusp.size)};
  }
  return DecoratedCusp{IdealPoint::At((m.a() * p + m.b()) / den),
                       cusp.size / (den * den)};
}

double TruncatedLength(const DecoratedCusp& c1, const DecoratedCusp& c2) {
  if (c1.base == c2.base) {
    throw InvalidInputError("truncated length needs distinct base points");
  }
  if (c1.base.is_infinite()) return std::log(c1.size / c2.size);
  if (c2.base.is_infinite()) return std::log(c2.size / c1.size);
  const double gap = c1.base.x() - c2.base.x();
  return std::log(gap * gap / (c1.size * c2.size));
}

double LambdaLength(const DecoratedCusp& c1, const DecoratedCusp& c2) {
  return std::exp(0.5 * TruncatedLength(c1, c2));
}

std::pair<Geodesic, double> AxisAndTranslationLength(const Mobius& m) {
  RequireHyperbolic(m);
  const double tr = m.Trace();
  const double length = 2 * std::acosh(std::fabs(tr) / 2);
  const double a = m.a(), b = m.b(), c = m.c(), d = m.d();
  Geodesic axis;
  if (c == 0) {
    const IdealPoint finite = IdealPoint::At(b / (d - a));
    if (std::fabs(a) > std::fabs(d)) {
      axis = Geodesic{finite, IdealPoint::Infinity()};
    } else {
      axis = Geodesic{IdealPoint::Infinity(), finite};
    }
    return {axis, length};
  }
  // Fixed points solve c z^2 + (d - a) z - b = 0.  The root where
  // |c z + d| > 1 attracts.
  const double disc = std::sqrt(tr * tr - 4);
  const double z1 = ((a - d) + disc) / (2 * c);
  const double z2 = ((a - d) - disc) / (2 * c);
  if (std::fabs(c * z1 + d) > std::fabs(c * z2 + d)) {
    axis = Geodesic{IdealPoint::At(z2), IdealPoint::At(z1)};
  } else {
    axis = Geodesic{IdealPoint::At(z1), IdealPoint::At(z2)};
  }
  return {axis, length};
}

Mobius AxisGenerator(const Mobius& m) {
  RequireHyperbolic(m);
  const double sign = m.Trace() > 0 ? 1.0 : -1.0;
  const double half_tr = 0.5 * std::fabs(m.Trace());
  const double sinh_half = std::sqrt(half_tr * half_tr - 1);
  // N = (sgn(tr) m - cosh(l/2) I) / sinh(l/2).
  return Mobius::Raw((sign * m.a() - half_tr) / sinh_half,
                     sign * m.b() / sinh_half, sign * m.c() / sinh_half,
                     (sign * m.d() - half_tr) / sinh_half);
}

Mobius TranslationAlongAxis(const Mobius& m, double t) {
  const Mobius n = AxisGenerator(m);
  const double ch = std::cosh(0.5 * t), sh = std::sinh(0.5 * t);
  return Mobius::Raw(ch + sh * n.a(), sh * n.b(), sh * n.c(),
                     ch + sh * n.d());
}

double HyperbolicDistance(std::complex<double> z, std::complex<double> w) {
  return 2 * std::asinh(std::abs(z - w) /
                        (2 * std::sqrt(z.imag() * w.imag())));
}

LogScaledMatrix::LogScaledMatrix(const Mobius& m)
    : log_scale_(0), m_{m.a(), m.b(), m.c(), m.d()} {
  Normalize();
}

LogScaledMatrix::LogScaledMatrix(double log_scale, double a, double b,
                                 double c, double d)
    : log_scale_(log_scale), m_{a, b, c, d} {
  Normalize();
}

void LogScaledMatrix::Normalize() {
  double big = 0;
  for (double e : m_) big = std::max(big, std::fabs(e));
  if (big == 0 || !std::isfinite(big)) {
    throw InternalError("log-scaled matrix lost all significance");
  }
  for (double& e : m_) e /= big;
  log_scale_ += std::log(big);
}

LogScaledMatrix LogScaledMatrix::operator*(const LogScaledMatrix& o) const {
  return LogScaledMatrix(log_scale_ + o.log_scale_,
                         m_[0] * o.m_[0] + m_[1] * o.m_[2],
                         m_[0] * o.m_[1] + m_[1] * o.m_[3],
                         m_[2] * o.m_[0] + m_[3] * o.m_[2],
                         m_[2] * o.m_[1] + m_[3] * o.m_[3]);
}

double LogScaledMatrix::LogAbsTrace() const {
  const double tr = std::fabs(m_[0] + m_[3]);
  if (tr == 0) return -std::numeric_limits<double>::infinity();
  return log_scale_ + std::log(tr);
}

LogScaledMatrix ScaledTranslation(const Mobius& generator, double t) {
  const double s = t >= 0 ? 1.0 : -1.0;
  const double tail = std::exp(-std::fabs(t));
  const double gap = -std::expm1(-std::fabs(t));  // 1 - tail
  const Mobius& n = generator;
  // (1 + tail) I + s (1 - tail) N
  return LogScaledMatrix(0.5 * std::fabs(t) - std::log(2.0),
                         (1 + tail) + s * gap * n.a(), s * gap * n.b(),
                         s * gap * n.c(), (1 + tail) + s * gap * n.d());
}

}  // namespace hilbert_teich
