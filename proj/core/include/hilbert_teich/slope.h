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

#ifndef HILBERT_TEICH_SLOPE_H_
#define HILBERT_TEICH_SLOPE_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hilbert_teich {

// A simple closed curve (or arc) on the once-punctured torus, recorded by its
// homology class (p, q) with gcd 1.  Stored canonically: q >= 0, and p >= 0
// when q == 0.
class Slope {
 public:
  // Throws InvalidInputError for (0, 0) or a non-primitive pair.
  Slope(int64_t p, int64_t q);

  // Parses "p/q"; nullopt on malformed text or an invalid pair.
  static std::optional<Slope> Parse(std::string_view text);

  int64_t p() const { return p_; }
  int64_t q() const { return q_; }
  std::string ToString() const;

  auto operator<=>(const Slope&) const = default;

 private:
  int64_t p_;
  int64_t q_;
};

// Geometric intersection number on the once-punctured torus: |p1 q2 - p2 q1|.
int64_t IntersectionNumber(const Slope& s1, const Slope& s2);

// det(u, v) = u.p v.q - u.q v.p for raw integer vectors.
inline int64_t Det(int64_t p1, int64_t q1, int64_t p2, int64_t q2) {
  return p1 * q2 - q1 * p2;
}

// An integer 2x2 matrix [[a, b], [c, d]] acting on column vectors (p, q).
struct IntMatrix2 {
  int64_t a = 1, b = 0, c = 0, d = 1;

  int64_t Det() const { return a * d - b * c; }
  IntMatrix2 operator*(const IntMatrix2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
            c * o.b + d * o.d};
  }
  // Inverse for determinant one.
  IntMatrix2 InverseUnimodular() const { return {d, -b, -c, a}; }
  bool operator==(const IntMatrix2&) const = default;
};

// g applied to a slope, re-canonicalized.
Slope Apply(const IntMatrix2& g, const Slope& s);

// Some g in SL(2, Z) with g (1, 0) = s.
IntMatrix2 BasisMatrixFor(const Slope& s);

}  // namespace hilbert_teich

#endif  // HILBERT_TEICH_SLOPE_H_
