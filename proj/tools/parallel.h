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

// Order-preserving parallel map over an index range.

#ifndef HILBERT_TEICH_TOOLS_PARALLEL_H_
#define HILBERT_TEICH_TOOLS_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hilbert_teich::tools {

// Hardware concurrency, capped by HILBERT_TEICH_THREADS when set to a
// positive integer.
inline int WorkerCount() {
  int n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("HILBERT_TEICH_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, cap);
  }
  return n;
}

// out[i] = fn(i) for i in [0, count).  Workers pull indices from a shared
// counter; results land in their own slot, so the output never depends on
// scheduling.  The exception of the lowest failing index is rethrown.
template <typename T, typename Fn>
std::vector<T> ParallelMap(size_t count, Fn fn) {
  std::vector<T> out(count);
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  size_t error_index = count;
  std::mutex error_mu;
  auto work = [&] {
    for (size_t i = next++; i < count; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (i < error_index) {
          error = std::current_exception();
          error_index = i;
        }
      }
    }
  };
  const int workers =
      static_cast<int>(std::min<size_t>(WorkerCount(), std::max<size_t>(count, 1)));
  std::vector<std::thread> threads;
  for (int w = 1; w < workers; ++w) threads.emplace_back(work);
  work();
  for (std::thread& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace hilbert_teich::tools

#endif  // HILBERT_TEICH_TOOLS_PARALLEL_H_
