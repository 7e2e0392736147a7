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

#include "hilbert_teich/words.h"

#include <algorithm>
#include <cstdlib>
#include <utility>
#include <vector>

#include "hilbert_teich/errors.h"

namespace hilbert_teich {

namespace {

char InverseLetter(char c) {
  switch (c) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    case 'B': return 'b';
  }
  throw InvalidInputError(std::string("not a generator letter: ") + c);
}

FreeAutomorphism Power(const FreeAutomorphism& f, const FreeAutomorphism& f_inv,
                       int64_t k) {
  FreeAutomorphism out;
  const FreeAutomorphism& step = k >= 0 ? f : f_inv;
  for (int64_t i = 0; i < std::llabs(k); ++i) out = out.Compose(step);
  return out;
}

const FreeAutomorphism& NielsenR() {
  static const FreeAutomorphism* r = new FreeAutomorphism("a", "ab");
  return *r;
}
const FreeAutomorphism& NielsenRInverse() {
  static const FreeAutomorphism* r = new FreeAutomorphism("a", "Ab");
  return *r;
}
const FreeAutomorphism& NielsenL() {
  static const FreeAutomorphism* l = new FreeAutomorphism("ba", "b");
  return *l;
}
const FreeAutomorphism& NielsenLInverse() {
  static const FreeAutomorphism* l = new FreeAutomorphism("Ba", "b");
  return *l;
}

}  // namespace

Word FreeReduce(std::string_view w) {
  Word out;
  out.reserve(w.size());
  for (char c : w) {
    if (!out.empty() && out.back() == InverseLetter(c)) {
      out.pop_back();
    } else {
      InverseLetter(c);  // validates the letter
      out.push_back(c);
    }
  }
  return out;
}

Word InverseWord(std::string_view w) {
  Word out(w.rbegin(), w.rend());
  for (char& c : out) c = InverseLetter(c);
  return out;
}

Word SlopeWord(const Slope& s) {
  const int64_t p = s.p(), q = s.q();
  // Each crossing happens at parameter u = value + tiebreak, with value the
  // rational num/den and the tiebreak an infinitesimal of order eps.  Only
  // vertical crossings carry an eps term: -eps/p.
  struct Crossing {
    int64_t num, den;
    int tiebreak;
    char letter;
  };
  std::vector<Crossing> crossings;
  const int64_t ap = std::llabs(p);
  for (int64_t k = 1; k <= ap; ++k) {
    crossings.push_back({p > 0 ? k : k - 1, ap, p > 0 ? -1 : 1,
                         p > 0 ? 'a' : 'A'});
  }
  for (int64_t m = 1; m <= q; ++m) crossings.push_back({m, q, 0, 'b'});
  std::sort(crossings.begin(), crossings.end(),
            [](const Crossing& x, const Crossing& y) {
              const __int128 lhs = static_cast<__int128>(x.num) * y.den;
              const __int128 rhs = static_cast<__int128>(y.num) * x.den;
              if (lhs != rhs) return lhs < rhs;
              return x.tiebreak < y.tiebreak;
            });
  Word w;
  for (auto it = crossings.rbegin(); it != crossings.rend(); ++it) {
    w.push_back(it->letter);
  }
  return w;
}

Word CyclicallyReduce(std::string_view w) {
  Word r = FreeReduce(w);
  size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == InverseLetter(r[hi - 1])) {
    ++lo;
    --hi;
  }
  return r.substr(lo, hi - lo);
}

Mobius EvaluateWord(std::string_view w, const Mobius& a, const Mobius& b) {
  const Mobius a_inv = a.Inverse(), b_inv = b.Inverse();
  Mobius out;
  for (char c : w) {
    switch (c) {
      case 'a': out = out * a; break;
      case 'A': out = out * a_inv; break;
      case 'b': out = out * b; break;
      case 'B': out = out * b_inv; break;
      default: InverseLetter(c);
    }
  }
  return out;
}

LogScaledMatrix EvaluateWord(std::string_view w, const LogScaledMatrix& a,
                             const LogScaledMatrix& a_inv,
                             const LogScaledMatrix& b,
                             const LogScaledMatrix& b_inv) {
  LogScaledMatrix out;
  for (char c : w) {
    switch (c) {
      case 'a': out = out * a; break;
      case 'A': out = out * a_inv; break;
      case 'b': out = out * b; break;
      case 'B': out = out * b_inv; break;
      default: InverseLetter(c);
    }
  }
  return out;
}

FreeAutomorphism::FreeAutomorphism(Word image_a, Word image_b)
    : image_a_(FreeReduce(image_a)), image_b_(FreeReduce(image_b)) {}

Word FreeAutomorphism::Apply(std::string_view w) const {
  Word out;
  for (char c : w) {
    switch (c) {
      case 'a': out += image_a_; break;
      case 'A': out += InverseWord(image_a_); break;
      case 'b': out += image_b_; break;
      case 'B': out += InverseWord(image_b_); break;
      default: InverseLetter(c);
    }
  }
  return FreeReduce(out);
}

FreeAutomorphism FreeAutomorphism::Compose(
    const FreeAutomorphism& other) const {
  return FreeAutomorphism(Apply(other.image_a_), Apply(other.image_b_));
}

FreeAutomorphism FreeAutomorphism::Realizing(const IntMatrix2& g) {
  if (g.Det() != 1) {
    throw InvalidInputError("mapping class matrix must have determinant 1");
  }
  // Row-reduce g to the identity by left multiplication with R^k, L^k and
  // -I, remembering the automorphism of each inverse step.  Then
  // g = step_1^-1 ... step_n^-1.
  std::vector<FreeAutomorphism> factors;
  IntMatrix2 m = g;
  while (m.c != 0) {
    if (m.a == 0) {
      m = IntMatrix2{1, 1, 0, 1} * m;
      factors.push_back(NielsenRInverse());
    } else if (std::llabs(m.a) > std::llabs(m.c)) {
      const int64_t k = m.a / m.c;
      m = IntMatrix2{1, -k, 0, 1} * m;
      factors.push_back(Power(NielsenR(), NielsenRInverse(), k));
    } else {
      const int64_t k = m.c / m.a;
      m = IntMatrix2{1, 0, -k, 1} * m;
      factors.push_back(Power(NielsenL(), NielsenLInverse(), k));
    }
  }
  if (m.a == -1) {
    m = IntMatrix2{-1, 0, 0, -1} * m;
    factors.push_back(FreeAutomorphism("A", "B"));
  }
  if (m.a != 1 || m.d != 1) throw InternalError("reduction left a non-unit");
  factors.push_back(Power(NielsenR(), NielsenRInverse(), m.b));

  FreeAutomorphism out;
  for (const FreeAutomorphism& f : factors) out = out.Compose(f);

  // Composing the moves leaves conjugated images such as (ABa, AbbaBa) for
  // (B, ba).  Conjugate by single letters while the total length drops.
  for (bool shorter = true; shorter;) {
    shorter = false;
    for (char c : {'a', 'A', 'b', 'B'}) {
      const Word l(1, c), r(1, InverseLetter(c));
      FreeAutomorphism candidate(l + out.image_a_ + r, l + out.image_b_ + r);
      if (candidate.image_a_.size() + candidate.image_b_.size() <
          out.image_a_.size() + out.image_b_.size()) {
        out = std::move(candidate);
        shorter = true;
      }
    }
  }
  return out;
}

}  // namespace hilbert_teich
