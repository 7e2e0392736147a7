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

#include "hilbert_teich/slope.h"

#include <charconv>
#include <cstdlib>
#include <numeric>

#include "hilbert_teich/errors.h"

namespace hilbert_teich {

Slope::Slope(int64_t p, int64_t q) {
  if (p == 0 && q == 0) throw InvalidInputError("slope (0, 0) is not a curve");
  if (std::gcd(p, q) != 1) {
    throw InvalidInputError("slope " + std::to_string(p) + "/" +
                            std::to_string(q) + " is not primitive");
  }
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  p_ = p;
  q_ = q;
}

std::optional<Slope> Slope::Parse(std::string_view text) {
  const size_t slash = text.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  int64_t p = 0, q = 0;
  const std::string_view ps = text.substr(0, slash);
  const std::string_view qs = text.substr(slash + 1);
  auto rp = std::from_chars(ps.data(), ps.data() + ps.size(), p);
  auto rq = std::from_chars(qs.data(), qs.data() + qs.size(), q);
  if (rp.ec != std::errc() || rp.ptr != ps.data() + ps.size() ||
      rq.ec != std::errc() || rq.ptr != qs.data() + qs.size()) {
    return std::nullopt;
  }
  if ((p == 0 && q == 0) || std::gcd(p, q) != 1) return std::nullopt;
  return Slope(p, q);
}

std::string Slope::ToString() const {
  return std::to_string(p_) + "/" + std::to_string(q_);
}

int64_t IntersectionNumber(const Slope& s1, const Slope& s2) {
  return std::llabs(Det(s1.p(), s1.q(), s2.p(), s2.q()));
}

Slope Apply(const IntMatrix2& g, const Slope& s) {
  return Slope(g.a * s.p() + g.b * s.q(), g.c * s.p() + g.d * s.q());
}

IntMatrix2 BasisMatrixFor(const Slope& s) {
  // Extended Euclid: find (r, t) with p t - q r = 1.
  int64_t old_r = s.p(), r = s.q();
  int64_t old_x = 1, x = 0;
  int64_t old_y = 0, y = 1;
  while (r != 0) {
    const int64_t k = old_r / r;
    int64_t tmp = old_r - k * r;
    old_r = r;
    r = tmp;
    tmp = old_x - k * x;
    old_x = x;
    x = tmp;
    tmp = old_y - k * y;
    old_y = y;
    y = tmp;
  }
  // old_x p + old_y q = old_r = +/-1.
  const int64_t sign = old_r;
  IntMatrix2 g{s.p(), -sign * old_y, s.q(), sign * old_x};
  if (g.Det() != 1) throw InternalError("basis completion is not unimodular");
  return g;
}

}  // namespace hilbert_teich
