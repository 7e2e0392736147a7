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

// Microbenchmarks for the hot paths of the experiments.

#include <vector>

#include <benchmark/benchmark.h>

#include "hilbert_teich/cone_hilbert.h"
#include "hilbert_teich/decorated_surface.h"
#include "hilbert_teich/earthquake.h"
#include "hilbert_teich/laminations.h"
#include "hilbert_teich/mcg.h"
#include "hilbert_teich/quadrilateral.h"
#include "hilbert_teich/random.h"
#include "hilbert_teich/teich_hilbert.h"
#include "hilbert_teich/triangulation.h"

namespace hilbert_teich {
namespace {

const PreferredTriangulation& Torus() {
  static const PreferredTriangulation* g =
      new PreferredTriangulation(PreferredTriangulation::OncePuncturedTorus());
  return *g;
}

void BM_BirkhoffDistance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ConeFunctionalSet cone = ConeFunctionalSet::PositiveOrthant(n);
  Rng rng(1);
  std::vector<double> x(n), y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = rng.Uniform(0.5, 2);
    y[i] = rng.Uniform(0.5, 2);
  }
  for (auto _ : state) benchmark::DoNotOptimize(BirkhoffDistance(cone, x, y));
}
BENCHMARK(BM_BirkhoffDistance)->Arg(3)->Arg(16)->Arg(128);

void BM_CrossRatioDistance(benchmark::State& state) {
  const ConeFunctionalSet cone = ConeFunctionalSet::PositiveOrthant(4);
  const std::vector<double> x{1, 2, 3, 4}, y{4, 1, 2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(CrossRatioDistance(cone, x, y));
}
BENCHMARK(BM_CrossRatioDistance);

void BM_HilbertDistance(benchmark::State& state) {
  Rng rng(2);
  const TruncatedLengthVector a = LengthVector(RandomStructure(rng), Torus());
  const TruncatedLengthVector b = LengthVector(RandomStructure(rng), Torus());
  for (auto _ : state) benchmark::DoNotOptimize(HilbertDistance(Torus(), a, b));
}
BENCHMARK(BM_HilbertDistance);

// Farey descent depth grows with the continued fraction of the slope.
void BM_ArcLength(benchmark::State& state) {
  const MarkedStructure x = MarkedStructure::ModularTorus();
  const Slope s(state.range(0), state.range(0) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(ArcLength(x, s));
}
BENCHMARK(BM_ArcLength)->Arg(2)->Arg(50)->Arg(1000);

void BM_HalfPlaneArcLength(benchmark::State& state) {
  const MarkedStructure x = MarkedStructure::ModularTorus();
  for (auto _ : state) benchmark::DoNotOptimize(HalfPlaneArcLength(x, Slope(3, 2)));
}
BENCHMARK(BM_HalfPlaneArcLength);

void BM_EarthquakeFlowLengths(benchmark::State& state) {
  const EarthquakeFlow flow(MarkedStructure::ModularTorus(), Slope(2, 1), 1);
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(flow.Lengths(Torus(), t));
}
BENCHMARK(BM_EarthquakeFlowLengths)->Arg(1)->Arg(1000)->Arg(1000000);

void BM_EarthquakeRay(benchmark::State& state) {
  const MarkedStructure x = MarkedStructure::ModularTorus();
  const WeightedMulticurve mu = WeightedMulticurve::Single(Slope(1, 0), 1);
  for (auto _ : state) {
    const EarthquakeRay ray(x, mu, Torus());
    benchmark::DoNotOptimize(ray.constants().d);
  }
}
BENCHMARK(BM_EarthquakeRay);

void BM_DiagonalFlip(benchmark::State& state) {
  Rng rng(3);
  const DecoratedQuadrilateral q = RandomDecoratedQuadrilateral(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(MeasureFlipBounds(AnalyzeDiagonalFlip(q)));
  }
}
BENCHMARK(BM_DiagonalFlip);

void BM_OrbitDistances(benchmark::State& state) {
  const MappingClass g = MappingClass::DehnTwist(Slope(1, 0));
  const MarkedStructure x = MarkedStructure::ModularTorus();
  const MarkedStructure y = MarkedStructure::FromTraceTriple(3, 6, 15);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        OrbitDistances(g, x, y, static_cast<int>(state.range(0)), Torus()));
  }
}
BENCHMARK(BM_OrbitDistances)->Arg(64);

}  // namespace
}  // namespace hilbert_teich

BENCHMARK_MAIN();
