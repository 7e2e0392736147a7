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

#ifndef HILBERT_TEICH_CONE_HILBERT_H_
#define HILBERT_TEICH_CONE_HILBERT_H_

#include <cstddef>
#include <span>
#include <vector>

namespace hilbert_teich {

// A polyhedral cone {x : f_k(x) >= 0 for all k} in R^N, stored by its facet
// functionals f_k(x) = <coeff_k, x>.  No vertex enumeration is ever done.
class ConeFunctionalSet {
 public:
  // Throws InvalidInputError if `functionals` is empty, if any functional is
  // the zero vector or has the wrong length, or if `witness` is not strictly
  // inside every facet.
  ConeFunctionalSet(int dimension, std::vector<std::vector<double>> functionals,
                    std::span<const double> witness);

  // The orthant {x_i >= 0} in R^n.
  static ConeFunctionalSet PositiveOrthant(int n);

  int dimension() const { return dimension_; }
  size_t size() const { return functionals_.size(); }
  const std::vector<double>& functional(size_t k) const {
    return functionals_[k];
  }
  const std::vector<std::vector<double>>& functionals() const {
    return functionals_;
  }

  // f_k(x).  Throws InvalidInputError on a dimension mismatch.
  double Evaluate(size_t k, std::span<const double> x) const;
  std::vector<double> EvaluateAll(std::span<const double> x) const;

 private:
  int dimension_;
  std::vector<std::vector<double>> functionals_;
};

// True iff f_k(x) >= -tol |f_k| |x| for every facet (max-entry norms), so
// boundary vectors assembled in floating point still count.
bool Contains(const ConeFunctionalSet& cone, std::span<const double> x,
              double tol = 1e-12);

// All three distances below require x and y strictly inside the cone; a
// violation throws InvalidInputError whose index() is the offending facet.

// 1/2 log(M/m) with M, m the extreme facet ratios f_k(x)/f_k(y).
double BirkhoffDistance(const ConeFunctionalSet& cone,
                        std::span<const double> x, std::span<const double> y);

// 1/2 (max_k log(f_k(x)/f_k(y)) + max_k log(f_k(y)/f_k(x))), i.e. the form
// built from distances to supporting hyperplanes.
double YamadaDistance(const ConeFunctionalSet& cone, std::span<const double> x,
                      std::span<const double> y);

// 1/2 log of the cross-ratio [a, b, y, x], where a and b are the points where
// the projective line through x and y leaves the cone (a beyond x, b beyond
// y).  Distances are measured on the affine slice where the sum of the facet
// functionals is 1.  Projectively equal x and y give 0 with no line
// construction.
double CrossRatioDistance(const ConeFunctionalSet& cone,
                          std::span<const double> x,
                          std::span<const double> y);

}  // namespace hilbert_teich

#endif  // HILBERT_TEICH_CONE_HILBERT_H_
