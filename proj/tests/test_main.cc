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

// main() for the unit tests.  Benchmarks linked into the binary run instead
// of the tests when --benchmark_filter is given.

#include <cstdlib>

// NOLINTBEGIN(build/include_order)
#include <benchmark/benchmark.h>
#include <gtest/gtest.h>
// NOLINTEND(build/include_order)

int main(int argc, char* argv[]) {
  benchmark::Initialize(&argc, argv);
  testing::InitGoogleTest(&argc, argv);

  if (!benchmark::GetBenchmarkFilter().empty()) {
    benchmark::RunSpecifiedBenchmarks();
    std::exit(EXIT_SUCCESS);
  }

  return RUN_ALL_TESTS();
}
