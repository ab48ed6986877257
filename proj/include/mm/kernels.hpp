#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mm/kahan.hpp"
#include "mm/parallel.hpp"

namespace mm {

template <class F>
double sum_compensated(std::span<const double> xs, F&& f) {
  Kahan acc;
  for (double x : xs) acc.add(f(x));
  return acc.value();
}

// Row block size for the O(k^2) pair kernels. Like kChunkSize, it fixes the
// partition independently of the thread count.
inline constexpr std::int64_t kRowBlock = 128;

// Sum of g(x_u, x_v) over unordered pairs u < v. Callers that need the sum
// over ordered pairs fold both orders into g. Rows are processed in fixed
// blocks with a compensated accumulator per block; block results are merged
// in index order, so the value is bit-identical at any thread count.
template <class G>
double pair_sum_blocked(std::span<const double> xs, G&& g, Exec exec = Exec::parallel) {
  const std::int64_t k = static_cast<std::int64_t>(xs.size());
  if (k < 2) return 0.0;
  const std::int64_t blocks = (k + kRowBlock - 1) / kRowBlock;
  std::vector<Kahan> partial(static_cast<std::size_t>(blocks));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
#endif
  for (std::int64_t b = 0; b < blocks; ++b) {
    Kahan acc;
    const std::int64_t row_lo = b * kRowBlock;
    const std::int64_t row_hi = std::min(k, row_lo + kRowBlock);
    for (std::int64_t u = row_lo; u < row_hi; ++u) {
      for (std::int64_t v = u + 1; v < k; ++v) {
        acc.add(g(xs[static_cast<std::size_t>(u)], xs[static_cast<std::size_t>(v)]));
      }
    }
    partial[static_cast<std::size_t>(b)] = acc;
  }
  Kahan total;
  for (const Kahan& p : partial) total.merge(p);
  return total.value();
}

// Plain single-accumulator reference for pair_sum_blocked, kept for tests and
// benchmarks.
template <class G>
double pair_sum_reference(std::span<const double> xs, G&& g) {
  const std::int64_t k = static_cast<std::int64_t>(xs.size());
  Kahan acc;
  for (std::int64_t u = 0; u < k; ++u) {
    for (std::int64_t v = u + 1; v < k; ++v) {
      acc.add(g(xs[static_cast<std::size_t>(u)], xs[static_cast<std::size_t>(v)]));
    }
  }
  return acc.value();
}

}  // namespace mm
