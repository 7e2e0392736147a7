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

// Words in the free group <a, b> = pi_1 of the once-punctured torus, and the
// automorphisms realizing SL(2, Z).  Letters: 'a', 'b', and 'A' = a^-1,
// 'B' = b^-1.  A representation sends a word to the left-to-right product of
// its letters' matrices.

#ifndef HILBERT_TEICH_WORDS_H_
#define HILBERT_TEICH_WORDS_H_

#include <string>
#include <string_view>

#include "hilbert_teich/hyperbolic.h"
#include "hilbert_teich/slope.h"

namespace hilbert_teich {

using Word = std::string;

Word FreeReduce(std::string_view w);
Word InverseWord(std::string_view w);
// Free reduction followed by removal of letters cancelling around the ends.
// Conjugation-invariant quantities such as traces survive, and evaluation
// loses far fewer digits.
Word CyclicallyReduce(std::string_view w);

// A primitive word in the conjugacy class of slope s.  It is read off the
// straight segment from (eps, delta), 0 < delta << eps << 1, to
// (eps + p, delta + q) on the square torus: crossing x = k rightwards is 'a'
// (leftwards 'A'), crossing y = k upwards is 'b'; the word lists the
// crossings in reverse order.  With this reading the geodesic from the cusp
// fixed point P to W(P) in the upper half-plane is the lift of the arc of
// slope s.
Word SlopeWord(const Slope& s);

Mobius EvaluateWord(std::string_view w, const Mobius& a, const Mobius& b);

// Same, in log-scaled arithmetic; the inverses are passed explicitly.
LogScaledMatrix EvaluateWord(std::string_view w, const LogScaledMatrix& a,
                             const LogScaledMatrix& a_inv,
                             const LogScaledMatrix& b,
                             const LogScaledMatrix& b_inv);

// An automorphism of <a, b> given by the images of the generators.
class FreeAutomorphism {
 public:
  FreeAutomorphism() : image_a_("a"), image_b_("b") {}
  FreeAutomorphism(Word image_a, Word image_b);

  // An automorphism whose action on homology is g.  Built from the Nielsen
  // moves r: (a, b) -> (a, ab) and l: (a, b) -> (ba, b), which act as
  // [[1, 1], [0, 1]] and [[1, 0], [1, 1]].  The pair of images is then
  // conjugated to minimal total length.  Throws InvalidInputError unless
  // det g = 1.
  static FreeAutomorphism Realizing(const IntMatrix2& g);

  const Word& image_a() const { return image_a_; }
  const Word& image_b() const { return image_b_; }

  Word Apply(std::string_view w) const;
  // (*this o other)(x) = this(other(x)).
  FreeAutomorphism Compose(const FreeAutomorphism& other) const;

 private:
  Word image_a_;
  Word image_b_;
};

}  // namespace hilbert_teich

#endif  // HILBERT_TEICH_WORDS_H_
