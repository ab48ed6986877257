#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mm/dist.hpp"

namespace mm {

// Multiplicity histogram of a sample: count(i) symbols appear exactly i times.
struct OccupancyProfile {
  std::vector<std::int64_t> multiplicity_counts;  // index i, 1 <= i <= n; index 0 unused
  std::int64_t n = 0;

  std::int64_t count(std::int64_t i) const {
    if (i < 1 || i >= static_cast<std::int64_t>(multiplicity_counts.size())) return 0;
    return multiplicity_counts[static_cast<std::size_t>(i)];
  }
  std::int64_t singletons() const { return count(1); }
};

OccupancyProfile profile(const Sample& s);

// fraction of sample positions holding singletons: count(1)/n
double good_turing(const Sample& s);

// Symmetric Dirichlet prior: k coordinates with concentration alpha each.
struct DirichletSpec {
  std::int64_t k = 1;
  double alpha = 1.0;
  double total() const { return static_cast<double>(k) * alpha; }
};

// Posterior mean of the missing mass under the symmetric Dirichlet prior:
// (unseen coordinates) * alpha / (k*alpha + n).
double dirichlet_bayes(const Sample& s, const DirichletSpec& spec);

// Maps a sample to an estimate in [0, 1]. Implementations are stateless and
// safe to share across threads.
class Estimator {
 public:
  virtual ~Estimator() = default;
  virtual double estimate(const Sample& s) const = 0;
  virtual std::string name() const = 0;
};

class GoodTuringEstimator final : public Estimator {
 public:
  double estimate(const Sample& s) const override { return good_turing(s); }
  std::string name() const override { return "gt"; }
};

class DirichletBayesEstimator final : public Estimator {
 public:
  explicit DirichletBayesEstimator(DirichletSpec spec);
  double estimate(const Sample& s) const override { return dirichlet_bayes(s, spec_); }
  std::string name() const override;
  const DirichletSpec& spec() const { return spec_; }

 private:
  DirichletSpec spec_;
};

// selector strings: "gt" | "dirichlet:<alpha>:<k>"
std::unique_ptr<Estimator> make_estimator(std::string_view selector);

}  // namespace mm
