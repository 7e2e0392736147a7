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

#ifndef HILBERT_TEICH_TRIANGULATION_H_
#define HILBERT_TEICH_TRIANGULATION_H_

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hilbert_teich/cone_hilbert.h"

namespace hilbert_teich {

// Sides of an ideal triangle as arc indices, in counterclockwise order.
using TriangleSides = std::array<int, 3>;

// A triangulation of S_{g,n} by 6g-5+2n arcs based at one puncture, cut into
// 4g-3+n ideal triangles and n-1 once-punctured discs.  Arcs are referred to
// by index; names are free-form labels (slope labels "p/q" on S_{1,1}).
class PreferredTriangulation {
 public:
  // Validates the Euler counts, that every arc is used exactly twice over
  // triangles and discs, that no triangle repeats a side, and that the
  // gluing closes up around a single vertex (all corners meet at the base
  // puncture).  Throws InvalidInputError naming the offending piece.
  static PreferredTriangulation Create(
      int genus, int punctures, std::vector<std::string> arcs,
      std::vector<TriangleSides> triangles,
      std::vector<std::vector<int>> discs);

  // S_{1,1} with arcs of slope 1/0, 0/1, 1/1 and triangles (0, 1, 2) twice.
  static PreferredTriangulation OncePuncturedTorus();
  // S_{0,4}: one triangle (0, 1, 2), each side closing off a punctured disc.
  static PreferredTriangulation FourPuncturedSphere();

  int genus() const { return genus_; }
  int punctures() const { return punctures_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<std::string>& arcs() const { return arcs_; }
  const std::vector<TriangleSides>& triangles() const { return triangles_; }
  const std::vector<std::vector<int>>& discs() const { return discs_; }

  // Index of the arc with this name; throws InvalidInputError if absent.
  int ArcIndex(std::string_view name) const;

  // Replace `arc`, the diagonal of the quadrilateral formed by its two
  // triangles, by the other diagonal.  The new arc keeps the index; it is
  // named `new_name`, or the old name with a trailing "'" when empty.  With
  // triangles (e, a, b) and (e, c, d) the result is (e', b, c), (e', d, a).
  // Throws InvalidInputError if the arc borders a disc or the flip would
  // produce a self-folded triangle.
  PreferredTriangulation Flip(int arc, std::string new_name = {}) const;

  // Quadrilateral around `arc` as the cyclic side sequence (a, b, c, d), so
  // that the Ptolemy relation reads lambda_e lambda_e' = l_a l_c + l_b l_d.
  std::array<int, 4> QuadrilateralSides(int arc) const;

 private:
  PreferredTriangulation() = default;
  int genus_ = 0;
  int punctures_ = 0;
  std::vector<std::string> arcs_;
  std::vector<TriangleSides> triangles_;
  std::vector<std::vector<int>> discs_;
};

// True when the two triangulations have the same triangles as cyclic triples
// of arc indices, ignoring names and triangle order.
bool EquivalentUpToRelabeling(const PreferredTriangulation& x,
                              const PreferredTriangulation& y);

// One cyclic functional a_i - a_j + a_k of triangle `triangle` with sides
// listed counterclockwise as (i, j, k).  The functional is twice the corner
// length at the vertex between sides i and k.
struct TriangleFunctional {
  int triangle;
  int i, j, k;
  double Evaluate(std::span<const double> v) const {
    return v[i] - v[j] + v[k];
  }
};

// The three cyclic functionals of every triangle, with duplicate coefficient
// vectors dropped (first occurrence kept).
std::vector<TriangleFunctional> CyclicFunctionals(
    const PreferredTriangulation& gamma);

// The cone cut out by CyclicFunctionals, witnessed by the all-ones vector.
ConeFunctionalSet HyperplaneFunctionals(const PreferredTriangulation& gamma);

// {a >= 0 : a_i <= a_j + a_k on every triangle}: nonnegativity functionals
// followed by the cyclic functionals.
ConeFunctionalSet ConeOfLaminations(const PreferredTriangulation& gamma);

// Some cyclic functional vanishes, to 1e-12 relative to max(1, |a|_inf).
bool OnLaminationBoundary(const PreferredTriangulation& gamma,
                          std::span<const double> a);

}  // namespace hilbert_teich

#endif  // HILBERT_TEICH_TRIANGULATION_H_
