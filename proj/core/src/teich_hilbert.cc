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

#include "hilbert_teich/teich_hilbert.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hilbert_teich/cone_hilbert.h"
#include "hilbert_teich/errors.h"

namespace hilbert_teich {

namespace {

void CheckSize(const PreferredTriangulation& gamma, size_t n) {
  if (static_cast<int>(n) != gamma.arc_count()) {
    throw InvalidInputError("vector length does not match the arc count");
  }
}

double SupLength(const TruncatedLengthVector& v) {
  return *std::max_element(v.lengths().begin(), v.lengths().end());
}

}  // namespace

double HilbertDistance(const PreferredTriangulation& gamma,
                       std::span<const double> v1,
                       std::span<const double> v2) {
  CheckSize(gamma, v1.size());
  CheckSize(gamma, v2.size());
  double forward = -std::numeric_limits<double>::infinity();
  double backward = -std::numeric_limits<double>::infinity();
  for (const TriangleFunctional& f : CyclicFunctionals(gamma)) {
    const double x = f.Evaluate(v1), y = f.Evaluate(v2);
    if (!(x > 0) || !(y > 0)) {
      throw InvalidInputError("triangle " + std::to_string(f.triangle) +
                                  " has a nonpositive functional value",
                              f.triangle);
    }
    const double r = std::log(x / y);
    forward = std::max(forward, r);
    backward = std::max(backward, -r);
  }
  return 0.5 * (forward + backward);
}

double HilbertDistance(const PreferredTriangulation& gamma,
                       const TruncatedLengthVector& v1,
                       const TruncatedLengthVector& v2) {
  return HilbertDistance(gamma, std::span<const double>(v1.lengths()),
                         std::span<const double>(v2.lengths()));
}

double CornerFormDistance(const TruncatedLengthVector& v1,
                          const TruncatedLengthVector& v2) {
  const PreferredTriangulation& gamma = v1.triangulation();
  CheckSize(gamma, v2.size());
  double forward = -std::numeric_limits<double>::infinity();
  double backward = -std::numeric_limits<double>::infinity();
  for (int t = 0; t < static_cast<int>(gamma.triangles().size()); ++t) {
    const std::array<double, 3> c1 = CornerLengths(v1, t);
    const std::array<double, 3> c2 = CornerLengths(v2, t);
    for (int r = 0; r < 3; ++r) {
      forward = std::max(forward, std::log(c1[r]) - std::log(c2[r]));
      backward = std::max(backward, std::log(c2[r]) - std::log(c1[r]));
    }
  }
  return 0.5 * (forward + backward);
}

double ConePathDistance(const PreferredTriangulation& gamma,
                        std::span<const double> v1,
                        std::span<const double> v2) {
  return BirkhoffDistance(HyperplaneFunctionals(gamma), v1, v2);
}

double ODistConstant(const TruncatedLengthVector& v0) {
  const double sup = SupLength(v0);
  return std::max(0.5 * std::log(sup) - std::log(v0.rho0()),
                  0.5 * sup + 0.5 * std::log(2.0));
}

double RadialComparison(const TruncatedLengthVector& v0,
                        const TruncatedLengthVector& v) {
  return HilbertDistance(v0.triangulation(), v0, v) -
         0.5 * std::log(SupLength(v));
}

FlipComparisonReport FlipComparison(
    const PreferredTriangulation& gamma,
    const PreferredTriangulation& gamma_prime,
    const TruncatedLengthVector& v0,
    std::span<const TruncatedLengthVector> samples) {
  FlipComparisonReport report;
  if (gamma.arc_count() == gamma_prime.arc_count()) {
    int renamed = -1, count = 0;
    for (int e = 0; e < gamma.arc_count(); ++e) {
      if (gamma.arcs()[e] != gamma_prime.arcs()[e]) {
        renamed = e;
        ++count;
      }
    }
    if (count == 1) {
      try {
        if (EquivalentUpToRelabeling(gamma.Flip(renamed), gamma_prime)) {
          report.flipped_arc = renamed;
        }
      } catch (const InvalidInputError&) {
        // The arc cannot flip; fall through to the rejection below.
      }
    }
  }
  if (report.flipped_arc < 0) {
    throw InvalidInputError("second triangulation is not a flip of the first");
  }
  const int arc = report.flipped_arc;
  const TruncatedLengthVector v0_prime(
      gamma_prime, FlipLengths(gamma, arc, v0.lengths()), v0.rho0());
  report.ceiling = ODistConstant(v0) + ODistConstant(v0_prime) +
                   0.5 * std::log(2.0);
  for (const TruncatedLengthVector& v : samples) {
    const TruncatedLengthVector v_prime(
        gamma_prime, FlipLengths(gamma, arc, v.lengths()), v.rho0());
    FlipComparisonRow row;
    row.d_gamma = HilbertDistance(gamma, v0, v);
    row.d_gamma_prime = HilbertDistance(gamma_prime, v0_prime, v_prime);
    row.diff = std::fabs(row.d_gamma - row.d_gamma_prime);
    report.max_difference = std::max(report.max_difference, row.diff);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace hilbert_teich
