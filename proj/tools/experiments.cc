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

#include "experiments.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "hilbert_teich/cone_hilbert.h"
#include "hilbert_teich/decorated_surface.h"
#include "hilbert_teich/earthquake.h"
#include "hilbert_teich/errors.h"
#include "hilbert_teich/laminations.h"
#include "hilbert_teich/mcg.h"
#include "hilbert_teich/quadrilateral.h"
#include "hilbert_teich/random.h"
#include "hilbert_teich/teich_hilbert.h"
#include "hilbert_teich/triangulation.h"
#include "parallel.h"

namespace hilbert_teich::tools {

namespace {

using Vec = std::vector<double>;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const PreferredTriangulation& Torus() {
  static const PreferredTriangulation* g =
      new PreferredTriangulation(PreferredTriangulation::OncePuncturedTorus());
  return *g;
}

std::vector<Slope> Alphas(const ExperimentConfig& c) {
  if (c.slope) return {*c.slope};
  return {Slope(1, 0), Slope(1, 1), Slope(2, 1)};
}

std::vector<double> Weights(const ExperimentConfig& c) {
  if (c.weight) return {*c.weight};
  return {0.5, 1.0, 2.0};
}

// steps points from 0 to t_max.
std::vector<double> Grid(const ExperimentConfig& c) {
  std::vector<double> t;
  for (int k = 0; k < c.steps; ++k) t.push_back(c.t_max * k / (c.steps - 1));
  return t;
}

double DistanceOnTorus(const TruncatedLengthVector& a,
                       const TruncatedLengthVector& b) {
  return HilbertDistance(a.triangulation(), a, b);
}

// Least-squares slope of y against log t over the points with t in
// [t_max / 4, t_max]; nullopt with fewer than three such points.
std::optional<double> LogSlope(const std::vector<double>& t,
                               const std::vector<double>& y, double t_max) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (size_t k = 0; k < t.size(); ++k) {
    if (t[k] < t_max / 4) continue;
    const double lx = std::log(t[k]);
    sx += lx;
    sy += y[k];
    sxx += lx * lx;
    sxy += lx * y[k];
    ++n;
  }
  if (n < 3) return std::nullopt;
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

struct ConeSample {
  ConeFunctionalSet cone;
  Vec x, y, z;
};

ConeSample RandomConeSample(Rng& rng, int n, int facets) {
  Vec w(n);
  for (double& v : w) v = rng.Uniform(0.5, 2);
  std::vector<Vec> fs;
  while (static_cast<int>(fs.size()) < facets) {
    Vec f(n);
    double at_w = 0;
    for (int i = 0; i < n; ++i) {
      f[i] = rng.Uniform(-1, 1);
      at_w += f[i] * w[i];
    }
    if (std::fabs(at_w) < 0.05) continue;
    if (at_w < 0) {
      for (double& v : f) v = -v;
    }
    fs.push_back(std::move(f));
  }
  ConeFunctionalSet cone(n, fs, w);
  auto interior = [&] {
    for (;;) {
      Vec x = w;
      for (double& v : x) v *= std::exp(rng.Uniform(-0.6, 0.6));
      const Vec vals = cone.EvaluateAll(x);
      if (*std::min_element(vals.begin(), vals.end()) > 1e-3) return x;
    }
  };
  Vec x = interior(), y = interior(), z = interior();
  return {std::move(cone), std::move(x), std::move(y), std::move(z)};
}

}  // namespace

ExperimentResult RunAxioms(const ExperimentConfig& config) {
  constexpr int kSamples = 1000;
  Rng rng(config.seed);
  std::vector<ConeSample> samples;
  for (int k = 0; k < kSamples; ++k) {
    samples.push_back(RandomConeSample(rng, 3 + k % 2, 3 + k % 2 + k % 4));
  }
  ExperimentResult r;
  r.table.columns = {"sample",      "dimension",       "facets",
                     "birkhoff",    "yamada",          "cross_ratio",
                     "triangle_excess", "projective_error"};
  r.table.rows = ParallelMap<Vec>(samples.size(), [&](size_t k) {
    const ConeSample& s = samples[k];
    const double b = BirkhoffDistance(s.cone, s.x, s.y);
    Vec sx = s.x, sy = s.y;
    for (double& v : sx) v *= 4.5;
    for (double& v : sy) v *= 0.03;
    return Vec{static_cast<double>(k),
               static_cast<double>(s.cone.dimension()),
               static_cast<double>(s.cone.size()),
               b,
               YamadaDistance(s.cone, s.x, s.y),
               CrossRatioDistance(s.cone, s.x, s.y),
               BirkhoffDistance(s.cone, s.x, s.z) - b -
                   BirkhoffDistance(s.cone, s.y, s.z),
               std::fabs(BirkhoffDistance(s.cone, sx, sy) - b)};
  });
  double spread = 0, excess = -HUGE_VAL, projective = 0;
  for (const Vec& row : r.table.rows) {
    spread = std::max({spread, std::fabs(row[4] - row[3]),
                       std::fabs(row[5] - row[3])});
    excess = std::max(excess, row[6]);
    projective = std::max(projective, row[7]);
  }
  r.claims = {
      {"Birkhoff, Yamada and cross-ratio distances agree", 1e-9, spread},
      {"triangle inequality: d(x,z) - d(x,y) - d(y,z)", 0, excess, 1e-9},
      {"projective invariance: |d(ax, by) - d(x, y)|", 1e-9, projective}};
  return r;
}

ExperimentResult RunRay(const ExperimentConfig& config) {
  const Slope alpha = config.slope.value_or(Slope(1, 0));
  const double weight = config.weight.value_or(1.0);
  const MarkedStructure x = MarkedStructure::ModularTorus(config.rho0);
  const EarthquakeRay ray(x, WeightedMulticurve::Single(alpha, weight),
                          Torus());
  const TruncatedLengthVector base = ray.Point(0);
  const std::vector<Slope> arcs = ArcSlopes(Torus());

  ExperimentResult r;
  r.table.columns = {"t",   "s",   "l_eta1", "l_eta2", "l_eta3",
                     "f_1", "f_2", "f_3",    "d_hilbert_from_base", "defect"};
  // Amplitudes t_max k / steps, k = 1..steps; t = 0 has no ray parameter.
  r.table.rows = ParallelMap<Vec>(config.steps, [&](size_t k) {
    const double t = config.t_max * static_cast<double>(k + 1) / config.steps;
    const double s = ray.ParameterAt(t);
    const TruncatedLengthVector v = ray.flow().LengthVector(Torus(), t);
    Vec row{t, s};
    for (int e = 0; e < 3; ++e) row.push_back(v[e]);
    for (int e = 0; e < 3; ++e) {
      row.push_back(v[e] - t * weight * IntersectionNumber(alpha, arcs[e]));
    }
    row.push_back(DistanceOnTorus(base, v));
    row.push_back(s >= 0 ? AlmostGeodesicDefect(ray, DistanceOnTorus, s, s + 1)
                         : kNaN);
    return row;
  });

  double previous = HUGE_VAL, rise = -HUGE_VAL;
  for (int s = 2; s <= 5; ++s) {
    const double defect = AlmostGeodesicDefect(ray, DistanceOnTorus, s, s + 1);
    rise = std::max(rise, defect - previous);
    previous = defect;
  }
  r.claims = {
      {"almost-geodesic defect at (s, s + 1) decreases over s = 2..5: max "
       "step change",
       0, rise},
      {"almost-geodesic defect at (5, 6)", 0.1, previous}};
  return r;
}

ExperimentResult RunBounds(const ExperimentConfig& config) {
  const MarkedStructure x = MarkedStructure::ModularTorus(config.rho0);
  const TruncatedLengthVector base = LengthVector(x, Torus());
  const std::vector<Slope> arcs = ArcSlopes(Torus());
  const std::vector<double> grid = Grid(config);
  struct Sweep {
    Slope alpha;
    double weight;
  };
  std::vector<Sweep> sweeps;
  for (const Slope& a : Alphas(config)) {
    for (double w : Weights(config)) sweeps.push_back({a, w});
  }

  ExperimentResult r;
  r.table.columns = {"alpha_p", "alpha_q", "weight",   "t",     "arc",
                     "length",  "f",       "f_bound",  "dl_dt", "dl_bound"};
  const std::vector<std::vector<Vec>> blocks =
      ParallelMap<std::vector<Vec>>(sweeps.size(), [&](size_t k) {
        const Sweep& sw = sweeps[k];
        const EarthquakeFlow flow(x, sw.alpha, sw.weight);
        std::vector<Vec> rows;
        for (int e = 0; e < 3; ++e) {
          const double i = IntersectionNumber(sw.alpha, arcs[e]);
          for (double t : grid) {
            const double l = flow.ArcLength(arcs[e], t);
            rows.push_back({static_cast<double>(sw.alpha.p()),
                            static_cast<double>(sw.alpha.q()), sw.weight, t,
                            static_cast<double>(e), l, l - t * sw.weight * i,
                            base[e] + std::exp(-config.rho0),
                            DerivativeCheck(flow, arcs[e], t), sw.weight * i});
          }
        }
        return rows;
      });

  double f_excess = -HUGE_VAL, f_rise = -HUGE_VAL, dl_excess = -HUGE_VAL,
         dl_drop = -HUGE_VAL;
  for (const std::vector<Vec>& block : blocks) {
    for (size_t k = 0; k < block.size(); ++k) {
      const Vec& row = block[k];
      f_excess = std::max(f_excess, std::fabs(row[6]) - row[7]);
      dl_excess = std::max(dl_excess, std::fabs(row[8]) - row[9]);
      // Rows of one arc are consecutive and ordered by t.
      if (k % grid.size() != 0) {
        f_rise = std::max(f_rise, row[6] - block[k - 1][6]);
        dl_drop = std::max(dl_drop, block[k - 1][8] - row[8]);
      }
      r.table.rows.push_back(row);
    }
  }
  r.claims = {
      {"|f_i(t)| - (l_i(X) + exp(-rho0))", 0, f_excess, 1e-9},
      {"f_i non-increasing: max f_i(t_k+1) - f_i(t_k)", 0, f_rise, 1e-9},
      {"|dl/dt| - w i(alpha, eta_i)", 0, dl_excess, 1e-6},
      {"dl/dt non-decreasing: max drop between grid points", 0, dl_drop,
       1e-8}};
  return r;
}

ExperimentResult RunFlip(const ExperimentConfig& config) {
  ExperimentResult r;

  // Diagonal flips of random decorated quadrilaterals.
  constexpr int kQuadrilaterals = 1000;
  Rng rng(config.seed);
  std::vector<DecoratedQuadrilateral> quads;
  for (int k = 0; k < kQuadrilaterals; ++k) {
    quads.push_back(RandomDecoratedQuadrilateral(rng));
  }
  Table quad_table;
  quad_table.columns = {"sample",          "start_shift", "end_shift",
                        "start_fixed",     "end_fixed",   "end_shift_cross",
                        "exact_l42",       "antisymmetry"};
  quad_table.rows = ParallelMap<Vec>(quads.size(), [&](size_t k) {
    const FlipBoundDeviations d =
        MeasureFlipBounds(AnalyzeDiagonalFlip(quads[k]));
    return Vec{static_cast<double>(k), d.start_shift, d.end_shift,
               d.start_fixed, d.end_fixed, d.end_shift_cross, d.exact_l42,
               std::fabs(Shearing(quads[k], Diagonal::kBeta) +
                         Shearing(quads[k], Diagonal::kAlpha))};
  });
  Vec worst(8, 0.0);
  for (const Vec& row : quad_table.rows) {
    for (int c = 1; c < 8; ++c) worst[c] = std::max(worst[c], row[c]);
  }
  const double log2 = std::log(2.0);
  r.claims = {
      {"|l'_i1 - l_i1 + shr|, i = 1, 3", log2, worst[1], 1e-9},
      {"|l'_i2 - l_i2 - shr|, i = 1, 3", log2, worst[2], 1e-9},
      {"|l'_i1 - l_i1|, i = 2, 4", log2, worst[3], 1e-9},
      {"|l'_i2 - l_i2|, i = 2, 4", log2, worst[4], 1e-9},
      {"|shr(beta) + shr(alpha)|", 1e-10, worst[7]},
      {"exact l'_42 formula", 1e-9, worst[6]}};
  r.extra_tables.emplace_back("quadrilaterals", std::move(quad_table));

  // d^Gamma against d^Gamma' along one earthquake path.
  const Slope alpha = config.slope.value_or(Slope(1, 0));
  const double weight = config.weight.value_or(1.0);
  const MarkedStructure x = MarkedStructure::ModularTorus(config.rho0);
  const EarthquakeFlow flow(x, alpha, weight);
  const TruncatedLengthVector v0 = LengthVector(x, Torus());
  const std::vector<double> grid = Grid(config);
  std::vector<TruncatedLengthVector> samples;
  for (auto& v : ParallelMap<std::optional<TruncatedLengthVector>>(
           grid.size(), [&](size_t k) {
             return std::optional(flow.LengthVector(Torus(), grid[k]));
           })) {
    samples.push_back(std::move(*v));
  }
  const FlipComparisonReport report = FlipComparison(
      Torus(), FlipSlopeLabelled(Torus(), config.arc), v0, samples);
  r.table.columns = {"t", "d_gamma", "d_gamma_prime", "diff", "ceiling"};
  std::vector<double> d_gamma;
  for (size_t k = 0; k < grid.size(); ++k) {
    const FlipComparisonRow& row = report.rows[k];
    r.table.rows.push_back(
        {grid[k], row.d_gamma, row.d_gamma_prime, row.diff, report.ceiling});
    d_gamma.push_back(row.d_gamma);
  }
  r.claims.push_back({"|d^Gamma - d^Gamma'| below C_Gamma + C_Gamma' + "
                      "1/2 log 2",
                      report.ceiling, report.max_difference});
  if (const std::optional<double> slope =
          LogSlope(grid, d_gamma, config.t_max)) {
    r.claims.push_back({"relative deviation of the slope of d^Gamma against "
                        "log t from 1/2 on [tmax/4, tmax]",
                        0.1, std::fabs(*slope - 0.5) / 0.5});
  }
  return r;
}

ExperimentResult RunRadial(const ExperimentConfig& config) {
  const MarkedStructure x = MarkedStructure::ModularTorus(config.rho0);
  const TruncatedLengthVector v0 = LengthVector(x, Torus());
  const double bound = ODistConstant(v0);
  const std::vector<double> grid = Grid(config);
  struct Sweep {
    Slope alpha;
    double weight;
  };
  std::vector<Sweep> sweeps;
  for (const Slope& a : Alphas(config)) {
    for (double w : Weights(config)) sweeps.push_back({a, w});
  }
  ExperimentResult r;
  r.table.columns = {"alpha_p",      "alpha_q",    "weight", "t",
                     "d_from_base",  "half_log_sup", "comparison", "bound"};
  const std::vector<std::vector<Vec>> blocks =
      ParallelMap<std::vector<Vec>>(sweeps.size(), [&](size_t k) {
        const EarthquakeFlow flow(x, sweeps[k].alpha, sweeps[k].weight);
        std::vector<Vec> rows;
        for (double t : grid) {
          const TruncatedLengthVector v = flow.LengthVector(Torus(), t);
          const double sup =
              *std::max_element(v.lengths().begin(), v.lengths().end());
          rows.push_back({static_cast<double>(sweeps[k].alpha.p()),
                          static_cast<double>(sweeps[k].alpha.q()),
                          sweeps[k].weight, t, DistanceOnTorus(v0, v),
                          0.5 * std::log(sup), RadialComparison(v0, v),
                          bound});
        }
        return rows;
      });
  double worst = 0;
  for (const std::vector<Vec>& block : blocks) {
    for (const Vec& row : block) {
      worst = std::max(worst, std::fabs(row[6]));
      r.table.rows.push_back(row);
    }
  }
  r.claims = {{"|d(X0, X) - 1/2 log sup l(X)| below C(Gamma, X0, rho0)",
               bound, worst}};
  return r;
}

ExperimentResult RunMcg(const ExperimentConfig& config) {
  const Slope alpha = config.slope.value_or(Slope(1, 0));
  const MappingClass g = MappingClass::DehnTwist(alpha);
  const MarkedStructure x = MarkedStructure::ModularTorus(config.rho0);
  const MarkedStructure y = MarkedStructure::FromTraceTriple(3, 6, 15,
                                                             config.rho0);
  ExperimentResult r;

  // Orbit distances, n = 0..steps.
  r.table.columns = {"n", "d_orbit_pair", "d_consecutive"};
  for (const OrbitRow& row : OrbitDistances(g, x, y, config.steps, Torus())) {
    r.table.rows.push_back({static_cast<double>(row.n), row.d_orbit_pair,
                            row.d_consecutive});
  }
  r.claims.push_back({"d(g^N X, g^(N+1) X) at N = steps", 0.05,
                      r.table.rows.back()[2]});

  // Distortion on pairs whose alpha-length is at most 3.
  constexpr double kLengthCap = 3;
  constexpr int kPool = 60, kPairs = 200;
  Rng rng(config.seed);
  std::vector<MarkedStructure> pool;
  while (static_cast<int>(pool.size()) < kPool) {
    MarkedStructure s = RandomStructure(rng, config.rho0, 1.5);
    if (s.CurveLength(alpha) <= kLengthCap) pool.push_back(std::move(s));
  }
  std::vector<std::pair<int, int>> pairs;
  for (int k = 0; k < kPairs; ++k) {
    const int i = rng.UniformInt(0, kPool - 1);
    pairs.emplace_back(i, rng.UniformInt(0, kPool - 1));
  }
  const double bound =
      TwistDistortionBound(Torus(), alpha, kLengthCap, config.rho0);
  Table distortion;
  distortion.columns = {"pair", "d_before", "d_after", "diff", "bound"};
  distortion.rows = ParallelMap<Vec>(pairs.size(), [&](size_t k) {
    const MarkedStructure& a = pool[pairs[k].first];
    const MarkedStructure& b = pool[pairs[k].second];
    const double before =
        DistanceOnTorus(LengthVector(a, Torus()), LengthVector(b, Torus()));
    const double after = DistanceOnTorus(OrbitLengthVector(g, 1, a, Torus()),
                                         OrbitLengthVector(g, 1, b, Torus()));
    return Vec{static_cast<double>(k), before, after,
               std::fabs(after - before), bound};
  });
  double worst = 0;
  for (const Vec& row : distortion.rows) worst = std::max(worst, row[3]);
  r.claims.push_back({"Dehn-twist distortion |d(gX, gY) - d(X, Y)| on pairs "
                      "with l_alpha <= 3",
                      bound, worst});
  r.extra_tables.emplace_back("distortion", std::move(distortion));

  // A pair the twist does not move isometrically.
  constexpr double kThreshold = 0.01;
  const std::optional<NonIsometryWitness> w =
      FindNonIsometryWitness(g, x, Torus(), kThreshold);
  Table witness;
  witness.columns = {"shift_p", "shift_q", "shift", "d_before", "d_after",
                     "delta"};
  if (w) {
    witness.rows.push_back({static_cast<double>(w->shift_slope.p()),
                            static_cast<double>(w->shift_slope.q()), w->shift,
                            w->d_before, w->d_after, w->delta()});
  }
  r.claims.push_back({"minus |delta| of the grid non-isometry witness",
                      -kThreshold, w ? -std::fabs(w->delta()) : 0.0});
  r.extra_tables.emplace_back("witness", std::move(witness));
  return r;
}

ExperimentResult RunExperiment(const ExperimentConfig& config) {
  Validate(config);
  if (config.command == "axioms") return RunAxioms(config);
  if (config.command == "ray") return RunRay(config);
  if (config.command == "bounds") return RunBounds(config);
  if (config.command == "flip") return RunFlip(config);
  if (config.command == "radial") return RunRadial(config);
  if (config.command == "mcg") return RunMcg(config);
  throw InvalidInputError("unknown command '" + config.command + "'");
}

}  // namespace hilbert_teich::tools
