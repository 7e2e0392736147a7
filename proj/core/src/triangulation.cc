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

#include "hilbert_teich/triangulation.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>

#include "hilbert_teich/errors.h"

namespace hilbert_teich {

namespace {

// Union-find over polygon corners.
class Corners {
 public:
  explicit Corners(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Union(int x, int y) { parent_[Find(x)] = Find(y); }
  int Classes() {
    int n = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i) {
      n += Find(i) == i;
    }
    return n;
  }

 private:
  std::vector<int> parent_;
};

// Rotate a triangle so that `arc` comes first.
TriangleSides RotateTo(const TriangleSides& t, int arc) {
  for (int r = 0; r < 3; ++r) {
    if (t[r] == arc) return {t[r], t[(r + 1) % 3], t[(r + 2) % 3]};
  }
  throw InternalError("arc not in triangle");
}

TriangleSides CanonicalRotation(const TriangleSides& t) {
  int r = static_cast<int>(std::min_element(t.begin(), t.end()) - t.begin());
  return {t[r], t[(r + 1) % 3], t[(r + 2) % 3]};
}

std::vector<int> Occurrences(const PreferredTriangulation& gamma, int arc) {
  std::vector<int> where;
  for (int t = 0; t < static_cast<int>(gamma.triangles().size()); ++t) {
    for (int s : gamma.triangles()[t]) {
      if (s == arc) where.push_back(t);
    }
  }
  return where;
}

}  // namespace

PreferredTriangulation PreferredTriangulation::Create(
    int genus, int punctures, std::vector<std::string> arcs,
    std::vector<TriangleSides> triangles,
    std::vector<std::vector<int>> discs) {
  if (genus < 0 || punctures < 1) {
    throw InvalidInputError("need genus >= 0 and at least one puncture");
  }
  const int want_arcs = 6 * genus - 5 + 2 * punctures;
  const int want_triangles = 4 * genus - 3 + punctures;
  if (want_arcs <= 0 || want_triangles <= 0) {
    throw InvalidInputError("surface admits no preferred triangulation");
  }
  if (static_cast<int>(arcs.size()) != want_arcs) {
    throw InvalidInputError("expected " + std::to_string(want_arcs) +
                            " arcs, got " + std::to_string(arcs.size()));
  }
  if (static_cast<int>(triangles.size()) != want_triangles) {
    throw InvalidInputError("expected " + std::to_string(want_triangles) +
                            " triangles, got " +
                            std::to_string(triangles.size()));
  }
  if (static_cast<int>(discs.size()) != punctures - 1) {
    throw InvalidInputError("expected " + std::to_string(punctures - 1) +
                            " punctured discs, got " +
                            std::to_string(discs.size()));
  }
  std::set<std::string> names;
  for (int e = 0; e < want_arcs; ++e) {
    if (arcs[e].empty() || !names.insert(arcs[e]).second) {
      throw InvalidInputError("arc names must be nonempty and distinct", e);
    }
  }

  // Polygon sides in counterclockwise order; triangles first, then discs.
  std::vector<std::vector<int>> polygons;
  for (int t = 0; t < want_triangles; ++t) {
    const TriangleSides& s = triangles[t];
    if (s[0] == s[1] || s[1] == s[2] || s[0] == s[2]) {
      throw InvalidInputError(
          "triangle " + std::to_string(t) + " is self-folded", t);
    }
    polygons.emplace_back(s.begin(), s.end());
  }
  for (size_t d = 0; d < discs.size(); ++d) {
    if (discs[d].empty()) {
      throw InvalidInputError("disc " + std::to_string(d) + " has no sides",
                              static_cast<int>(d));
    }
    polygons.push_back(discs[d]);
  }

  // Each arc is used twice.  Corner c of a polygon sits between sides c-1
  // and c; side i runs from corner i to corner i+1.  Orientable gluing of
  // two sides identifies the start of one with the end of the other.
  std::vector<std::vector<std::pair<int, int>>> uses(want_arcs);
  std::vector<int> first_corner;
  int corners = 0;
  for (int p = 0; p < static_cast<int>(polygons.size()); ++p) {
    first_corner.push_back(corners);
    for (int i = 0; i < static_cast<int>(polygons[p].size()); ++i) {
      const int e = polygons[p][i];
      if (e < 0 || e >= want_arcs) {
        throw InvalidInputError("side refers to unknown arc " +
                                    std::to_string(e),
                                p);
      }
      uses[e].push_back({p, i});
    }
    corners += static_cast<int>(polygons[p].size());
  }
  Corners vertex(corners);
  auto corner = [&](int p, int i) {
    const int m = static_cast<int>(polygons[p].size());
    return first_corner[p] + (i % m);
  };
  for (int e = 0; e < want_arcs; ++e) {
    if (uses[e].size() != 2) {
      throw InvalidInputError("arc " + arcs[e] + " is used " +
                                  std::to_string(uses[e].size()) +
                                  " times, expected 2",
                              e);
    }
    auto [p, i] = uses[e][0];
    auto [q, j] = uses[e][1];
    vertex.Union(corner(p, i), corner(q, j + 1));
    vertex.Union(corner(p, i + 1), corner(q, j));
  }
  if (vertex.Classes() != 1) {
    throw InvalidInputError("gluing has " + std::to_string(vertex.Classes()) +
                            " vertices; a preferred triangulation has one "
                            "(check the counterclockwise side order)");
  }

  PreferredTriangulation out;
  out.genus_ = genus;
  out.punctures_ = punctures;
  out.arcs_ = std::move(arcs);
  out.triangles_ = std::move(triangles);
  out.discs_ = std::move(discs);
  return out;
}

PreferredTriangulation PreferredTriangulation::OncePuncturedTorus() {
  return Create(1, 1, {"1/0", "0/1", "1/1"}, {{0, 1, 2}, {0, 1, 2}}, {});
}

PreferredTriangulation PreferredTriangulation::FourPuncturedSphere() {
  return Create(0, 4, {"1", "2", "3"}, {{0, 1, 2}}, {{0}, {1}, {2}});
}

int PreferredTriangulation::ArcIndex(std::string_view name) const {
  for (int e = 0; e < arc_count(); ++e) {
    if (arcs_[e] == name) return e;
  }
  throw InvalidInputError("no arc named " + std::string(name));
}

std::array<int, 4> PreferredTriangulation::QuadrilateralSides(int arc) const {
  if (arc < 0 || arc >= arc_count()) {
    throw InvalidInputError("arc index out of range", arc);
  }
  for (const auto& disc : discs_) {
    if (std::find(disc.begin(), disc.end(), arc) != disc.end()) {
      throw InvalidInputError(
          "arc " + arcs_[arc] + " borders a punctured disc and cannot flip",
          arc);
    }
  }
  const std::vector<int> where = Occurrences(*this, arc);
  if (where.size() != 2 || where[0] == where[1]) {
    throw InvalidInputError(
        "arc " + arcs_[arc] + " is not shared by two distinct triangles", arc);
  }
  const TriangleSides t1 = RotateTo(triangles_[where[0]], arc);
  const TriangleSides t2 = RotateTo(triangles_[where[1]], arc);
  return {t1[1], t1[2], t2[1], t2[2]};
}

PreferredTriangulation PreferredTriangulation::Flip(
    int arc, std::string new_name) const {
  const std::array<int, 4> q = QuadrilateralSides(arc);
  const std::vector<int> where = Occurrences(*this, arc);
  std::vector<TriangleSides> triangles = triangles_;
  triangles[where[0]] = {arc, q[1], q[2]};
  triangles[where[1]] = {arc, q[3], q[0]};
  for (int w : where) {
    const TriangleSides& t = triangles[w];
    if (t[1] == t[2]) {
      throw InvalidInputError("flipping arc " + arcs_[arc] +
                                  " would create a self-folded triangle",
                              arc);
    }
  }
  std::vector<std::string> arcs = arcs_;
  arcs[arc] = new_name.empty() ? arcs_[arc] + "'" : std::move(new_name);
  return Create(genus_, punctures_, std::move(arcs), std::move(triangles),
                discs_);
}

bool EquivalentUpToRelabeling(const PreferredTriangulation& x,
                              const PreferredTriangulation& y) {
  if (x.genus() != y.genus() || x.punctures() != y.punctures()) return false;
  auto canonical = [](const PreferredTriangulation& g) {
    std::vector<TriangleSides> out;
    for (const TriangleSides& t : g.triangles()) {
      out.push_back(CanonicalRotation(t));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return canonical(x) == canonical(y);
}

std::vector<TriangleFunctional> CyclicFunctionals(
    const PreferredTriangulation& gamma) {
  std::vector<TriangleFunctional> out;
  std::set<std::vector<int>> seen;
  const int n = gamma.arc_count();
  for (int t = 0; t < static_cast<int>(gamma.triangles().size()); ++t) {
    const TriangleSides& s = gamma.triangles()[t];
    for (int r = 0; r < 3; ++r) {
      const int i = s[r], j = s[(r + 1) % 3], k = s[(r + 2) % 3];
      std::vector<int> coeff(n, 0);
      coeff[i] += 1;
      coeff[j] -= 1;
      coeff[k] += 1;
      if (seen.insert(coeff).second) out.push_back({t, i, j, k});
    }
  }
  return out;
}

ConeFunctionalSet HyperplaneFunctionals(const PreferredTriangulation& gamma) {
  const int n = gamma.arc_count();
  std::vector<std::vector<double>> functionals;
  for (const TriangleFunctional& f : CyclicFunctionals(gamma)) {
    std::vector<double> coeff(n, 0.0);
    coeff[f.i] += 1;
    coeff[f.j] -= 1;
    coeff[f.k] += 1;
    functionals.push_back(std::move(coeff));
  }
  std::vector<double> witness(n, 1.0);
  return ConeFunctionalSet(n, std::move(functionals), witness);
}

ConeFunctionalSet ConeOfLaminations(const PreferredTriangulation& gamma) {
  const int n = gamma.arc_count();
  std::vector<std::vector<double>> functionals;
  for (int e = 0; e < n; ++e) {
    std::vector<double> coeff(n, 0.0);
    coeff[e] = 1;
    functionals.push_back(std::move(coeff));
  }
  const ConeFunctionalSet triangles = HyperplaneFunctionals(gamma);
  for (const auto& f : triangles.functionals()) functionals.push_back(f);
  std::vector<double> witness(n, 1.0);
  return ConeFunctionalSet(n, std::move(functionals), witness);
}

bool OnLaminationBoundary(const PreferredTriangulation& gamma,
                          std::span<const double> a) {
  if (static_cast<int>(a.size()) != gamma.arc_count()) {
    throw InvalidInputError("vector length does not match the arc count");
  }
  double scale = 1;
  for (double x : a) scale = std::max(scale, std::fabs(x));
  for (const TriangleFunctional& f : CyclicFunctionals(gamma)) {
    if (std::fabs(f.Evaluate(a)) <= 1e-12 * scale) return true;
  }
  return false;
}

}  // namespace hilbert_teich
