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

#include "hilbert_teich/cone_hilbert.h"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "hilbert_teich/errors.h"

namespace hilbert_teich {

namespace {

void CheckDimension(const ConeFunctionalSet& cone,
                    std::span<const double> x) {
  if (static_cast<int>(x.size()) != cone.dimension()) {
    throw InvalidInputError("point has dimension " + std::to_string(x.size()) +
                            ", cone has dimension " +
                            std::to_string(cone.dimension()));
  }
}

// Facet values of an interior point; throws naming the first facet where the
// point is not strictly inside.
std::vector<double> InteriorValues(const ConeFunctionalSet& cone,
                                   std::span<const double> x,
                                   const char* which) {
  std::vector<double> values = cone.EvaluateAll(x);
  for (size_t k = 0; k < values.size(); ++k) {
    if (!(values[k] > 0)) {
      throw InvalidInputError(std::string(which) +
                                  " is not interior: facet " +
                                  std::to_string(k) + " evaluates to " +
                                  std::to_string(values[k]),
                              static_cast<int>(k));
    }
  }
  return values;
}

double Norm(std::span<const double> v) {
  double s = 0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

}  // namespace

ConeFunctionalSet::ConeFunctionalSet(
    int dimension, std::vector<std::vector<double>> functionals,
    std::span<const double> witness)
    : dimension_(dimension), functionals_(std::move(functionals)) {
  if (dimension_ <= 0) {
    throw InvalidInputError("cone dimension must be positive");
  }
  if (functionals_.empty()) {
    throw InvalidInputError("cone needs at least one facet functional");
  }
  for (size_t k = 0; k < functionals_.size(); ++k) {
    const auto& f = functionals_[k];
    if (static_cast<int>(f.size()) != dimension_) {
      throw InvalidInputError(
          "functional " + std::to_string(k) + " has the wrong length",
          static_cast<int>(k));
    }
    if (std::all_of(f.begin(), f.end(), [](double c) { return c == 0; })) {
      throw InvalidInputError(
          "functional " + std::to_string(k) + " is the zero vector",
          static_cast<int>(k));
    }
  }
  CheckDimension(*this, witness);
  InteriorValues(*this, witness, "witness");
}

ConeFunctionalSet ConeFunctionalSet::PositiveOrthant(int n) {
  std::vector<std::vector<double>> f(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) f[i][i] = 1;
  std::vector<double> witness(n, 1.0);
  return ConeFunctionalSet(n, std::move(f), witness);
}

double ConeFunctionalSet::Evaluate(size_t k, std::span<const double> x) const {
  CheckDimension(*this, x);
  const auto& f = functionals_[k];
  double s = 0;
  for (int i = 0; i < dimension_; ++i) s += f[i] * x[i];
  return s;
}

std::vector<double> ConeFunctionalSet::EvaluateAll(
    std::span<const double> x) const {
  CheckDimension(*this, x);
  std::vector<double> out(functionals_.size());
  for (size_t k = 0; k < functionals_.size(); ++k) out[k] = Evaluate(k, x);
  return out;
}

bool Contains(const ConeFunctionalSet& cone, std::span<const double> x,
              double tol) {
  CheckDimension(cone, x);
  double norm_x = 0;
  for (double v : x) norm_x = std::max(norm_x, std::fabs(v));
  for (size_t k = 0; k < cone.size(); ++k) {
    double norm_f = 0;
    for (double c : cone.functional(k)) norm_f = std::max(norm_f, std::fabs(c));
    if (cone.Evaluate(k, x) < -tol * norm_f * norm_x) return false;
  }
  return true;
}

double BirkhoffDistance(const ConeFunctionalSet& cone,
                        std::span<const double> x, std::span<const double> y) {
  const std::vector<double> fx = InteriorValues(cone, x, "x");
  const std::vector<double> fy = InteriorValues(cone, y, "y");
  double big = 0, small = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < fx.size(); ++k) {
    const double r = fx[k] / fy[k];
    big = std::max(big, r);
    small = std::min(small, r);
  }
  return 0.5 * std::log(big / small);
}

double YamadaDistance(const ConeFunctionalSet& cone, std::span<const double> x,
                      std::span<const double> y) {
  const std::vector<double> fx = InteriorValues(cone, x, "x");
  const std::vector<double> fy = InteriorValues(cone, y, "y");
  double forward = -std::numeric_limits<double>::infinity();
  double backward = -std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < fx.size(); ++k) {
    forward = std::max(forward, std::log(fx[k]) - std::log(fy[k]));
    backward = std::max(backward, std::log(fy[k]) - std::log(fx[k]));
  }
  return 0.5 * (forward + backward);
}

double CrossRatioDistance(const ConeFunctionalSet& cone,
                          std::span<const double> x,
                          std::span<const double> y) {
  const std::vector<double> fx = InteriorValues(cone, x, "x");
  const std::vector<double> fy = InteriorValues(cone, y, "y");

  // Projective equality: every facet ratio agrees to rounding.
  double big = 0, small = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < fx.size(); ++k) {
    big = std::max(big, fx[k] / fy[k]);
    small = std::min(small, fx[k] / fy[k]);
  }
  if (big - small <= 8 * DBL_EPSILON * big) return 0;

  // The projective line through x and y leaves the cone at a = x - s_a y and
  // b = y - s_b x, where s_a and s_b are the largest multiples keeping every
  // facet nonnegative.  Working projectively matters: the affine line
  // x + u (y - x) can stay inside the cone and exit through infinity.
  const double s_a = small;      // min_k fx / fy
  const double s_b = 1.0 / big;  // min_k fy / fx
  const size_t n = x.size();

  // Measure on the affine slice where the facet sum is 1; the four points
  // are collinear there and the sum is positive on every nonzero boundary
  // point that is not in the lineality space.
  std::vector<double> sum_coeff(n, 0.0);
  for (size_t k = 0; k < cone.size(); ++k) {
    for (size_t i = 0; i < n; ++i) sum_coeff[i] += cone.functional(k)[i];
  }
  auto normalized = [&](std::vector<double> p) {
    double l = 0;
    for (size_t i = 0; i < n; ++i) l += sum_coeff[i] * p[i];
    for (double& v : p) v /= l;
    return p;
  };
  std::vector<double> a(n), b(n);
  for (size_t i = 0; i < n; ++i) {
    a[i] = x[i] - s_a * y[i];
    b[i] = y[i] - s_b * x[i];
  }
  const std::vector<double> xa =
      normalized(std::vector<double>(x.begin(), x.end()));
  const std::vector<double> ya =
      normalized(std::vector<double>(y.begin(), y.end()));
  a = normalized(std::move(a));
  b = normalized(std::move(b));
  auto dist = [&](const std::vector<double>& p, const std::vector<double>& q) {
    std::vector<double> d(n);
    for (size_t i = 0; i < n; ++i) d[i] = p[i] - q[i];
    return Norm(d);
  };
  return 0.5 * std::log((dist(a, ya) * dist(b, xa)) /
                        (dist(a, xa) * dist(b, ya)));
}

}  // namespace hilbert_teich
