#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mm {

enum class Exec { serial, parallel };

inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Fixed chunk size: the partition of the index space, and hence the merge
// order, never depends on the number of threads.
inline constexpr std::int64_t kChunkSize = 1024;

// Runs body(begin, end, state) over fixed chunks of [0, count) and merges the
// per-chunk states in chunk order. State needs a default constructor and
// merge(const State&). Output is bit-identical for serial and parallel
// execution at any thread count.
template <class State, class Body>
State run_chunked(std::int64_t count, Body&& body, Exec exec = Exec::parallel) {
  const std::int64_t chunks = count <= 0 ? 0 : (count + kChunkSize - 1) / kChunkSize;
  std::vector<State> partial(static_cast<std::size_t>(chunks));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
#endif
  for (std::int64_t c = 0; c < chunks; ++c) {
    body(c * kChunkSize, std::min(count, (c + 1) * kChunkSize),
         partial[static_cast<std::size_t>(c)]);
  }
  State total{};
  for (const State& s : partial) total.merge(s);
  return total;
}

}  // namespace mm
