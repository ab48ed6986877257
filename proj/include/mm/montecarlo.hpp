#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "mm/dist.hpp"
#include "mm/estimators.hpp"
#include "mm/parallel.hpp"
#include "mm/risk.hpp"

namespace mm {

// Streaming moments (Welford) with the parallel combination rule, so chunked
// accumulation merged in a fixed order reproduces a single pass within
// rounding.
struct RunningStats {
  std::int64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;  // sum of squared deviations from the running mean
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();

  void push(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
    if (x < min) min = x;
    if (x > max) max = x;
  }

  void merge(const RunningStats& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double delta = o.mean - mean;
    const double total = static_cast<double>(count + o.count);
    mean += delta * (static_cast<double>(o.count) / total);
    m2 += o.m2 + delta * delta * (static_cast<double>(count) * static_cast<double>(o.count) / total);
    count += o.count;
    if (o.min < min) min = o.min;
    if (o.max > max) max = o.max;
  }

  double variance() const { return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0; }
  double std_error() const {
    return count > 0 ? std::sqrt(variance() / static_cast<double>(count)) : 0.0;
  }
};

struct SimConfig {
  std::int64_t n = 1;
  std::int64_t reps = 1;
  std::uint64_t seed = 0;
  std::string estimator = "gt";  // selector, see make_estimator
  std::string dist;              // descriptor, see make_distribution
};

struct McResult {
  double value = 0.0;
  double std_error = 0.0;
  RunningStats stats;
};

// Mean squared error of the estimator over seeded replicates. Replicate r
// always uses stream (seed, r), and chunk results merge in index order, so
// the output is bit-identical across runs and thread counts.
McResult mc_risk(const Distribution& d, const Estimator& e, std::int64_t n,
                 std::int64_t reps, std::uint64_t seed, Exec exec = Exec::parallel);
McResult mc_risk(const SimConfig& cfg, Exec exec = Exec::parallel);

// Mean signed error (estimate - missing mass) over replicates.
McResult mc_bias(const Distribution& d, const Estimator& e, std::int64_t n,
                 std::int64_t reps, std::uint64_t seed, Exec exec = Exec::parallel);
McResult mc_bias(const SimConfig& cfg, Exec exec = Exec::parallel);

// Plain single-pass loop kept as the reference for the chunked engine.
McResult mc_risk_reference(const Distribution& d, const Estimator& e, std::int64_t n,
                           std::int64_t reps, std::uint64_t seed);

enum class SweepAxis { n, k, c };

struct SweepRow {
  SweepAxis axis = SweepAxis::n;
  double value = 0.0;
  RiskReport report;
};

// One row per value. axis=n varies the sample length under the base
// descriptor, axis=k rebuilds the base family with that support size, and
// axis=c uses the uniform family with k = ceil(c*n). Row r draws from seed
// stream derive_seed(seed, r), so rows are independent and reproducible.
std::vector<SweepRow> mc_sweep(const SimConfig& base, SweepAxis axis,
                               std::span<const double> values, RiskMethod method,
                               Exec exec = Exec::parallel);

}  // namespace mm
