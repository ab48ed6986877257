#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mm/rng.hpp"

namespace mm {

using Symbol = std::int64_t;

// Finite-support distribution over the index alphabet {0, ..., k-1}.
// Immutable after construction; entries are nonnegative and sum to 1 within
// 1e-12. Constructors for the special families keep a family tag so risk
// evaluators can collapse symmetric sums.
class Distribution {
 public:
  enum class Family { general, uniform, pc, zipf };

  // all k entries equal 1/k
  static Distribution uniform(std::int64_t k);

  // entry 0 = p0 (>= 1/2), entries 1..k each (1-p0)/k; support size k+1
  static Distribution pc(double p0, std::int64_t k);

  // arbitrary nonnegative entries summing to 1 within 1e-9; renormalized
  static Distribution from_probs(std::vector<double> probs);

  // p(i) proportional to (i+1)^(-s) over {0, ..., k-1}
  static Distribution zipf(std::int64_t k, double s);

  std::int64_t support_size() const { return static_cast<std::int64_t>(probs_.size()); }
  const std::vector<double>& probs() const { return probs_; }
  double prob(Symbol u) const { return probs_[static_cast<std::size_t>(u)]; }
  Family family() const { return family_; }
  double pc_head() const { return pc_head_; }
  // compensated sum of all entries (1 up to rounding)
  double total_mass() const { return total_; }
  std::string describe() const;

 private:
  Distribution(std::vector<double> probs, Family family, double pc_head);

  std::vector<double> probs_;
  Family family_;
  double pc_head_ = 0.0;
  double total_ = 0.0;
};

struct Sample {
  std::vector<Symbol> symbols;
  std::int64_t size() const { return static_cast<std::int64_t>(symbols.size()); }
};

// Draws one symbol at a time. Alias table for alphabets larger than 64,
// inverse-CDF scan otherwise. Immutable after construction and safe to share
// across threads (each thread brings its own Rng).
class DiscreteSampler {
 public:
  explicit DiscreteSampler(const Distribution& d);

  Symbol draw(Rng& rng) const {
    if (!accept_.empty()) {
      const auto i = static_cast<std::size_t>(rng.next_below(accept_.size()));
      return rng.next_unit() < accept_[i] ? static_cast<Symbol>(i) : alias_[i];
    }
    const double u = rng.next_unit();
    for (std::size_t i = 0; i + 1 < cdf_.size(); ++i) {
      if (u < cdf_[i]) return static_cast<Symbol>(i);
    }
    return static_cast<Symbol>(cdf_.size() - 1);
  }

 private:
  std::vector<double> accept_;
  std::vector<Symbol> alias_;
  std::vector<double> cdf_;
};

// n i.i.d. draws; a pure function of (d, n, seed). Uses stream 0 of the seed.
Sample sample_iid(const Distribution& d, std::int64_t n, std::uint64_t seed);

// total probability of the symbols that do not appear in the sample
double missing_mass(const Distribution& d, const Sample& s);

}  // namespace mm
