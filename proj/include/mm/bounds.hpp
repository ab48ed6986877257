#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "mm/estimators.hpp"
#include "mm/optimize.hpp"
#include "mm/parallel.hpp"

namespace mm {

enum class BoundMethod { dirichlet_prior, reduction, bracket };
std::string to_string(BoundMethod m);

struct BoundReport {
  std::int64_t n = 0;
  BoundMethod method = BoundMethod::bracket;
  double value = 0.0;
  std::string params;
  double normalized = 0.0;  // n * value
};

// Expected posterior variance of the missing mass under a symmetric Dirichlet
// prior, in closed form: the Beta-ratio expression collapsed to its two
// distinct term classes and evaluated in log-space. Lower-bounds the risk of
// every estimator averaged over the prior. k = 1 is identically 0, and for
// k = 2 the cross term sits at the Beta pole and takes its limit value 0.
double dirichlet_bayes_risk(std::int64_t n, const DirichletSpec& spec);

// General (possibly asymmetric) concentration vector; O(k^2), guarded at
// k <= 2000.
double dirichlet_bayes_risk(std::int64_t n, std::span<const double> alphas,
                            Exec exec = Exec::parallel);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

// Monte Carlo oracle for dirichlet_bayes_risk: samples X^n through the
// marginal urn process of the symmetric prior (a new coordinate appears with
// probability (k-d)*alpha/(a+t) after t draws with d distinct symbols), then
// takes the posterior variance of the unseen mass in closed form via the
// aggregation property: with m unseen coordinates the missing mass is
// Beta(m*alpha, a+n-m*alpha).
McEstimate mc_bayes_variance(std::int64_t n, const DirichletSpec& spec,
                             std::int64_t reps, std::uint64_t seed,
                             Exec exec = Exec::parallel);

// Normalized lower-bound coefficient of the Dirichlet prior family with
// alpha = 1/n, k = c*n^2: c/(c+1)^3.
double dirichlet_bound_coefficient(double c);

// Golden-section maximization; the maximum is 4/27 at c = 1/2.
ScalarMax maximize_dirichlet_coefficient();

enum class BernoulliEstimator { empirical, add_half_sqrt_n };

struct WorstCaseRisk {
  double p_worst = 0.0;
  double risk = 0.0;
};

// Worst-case squared-error risk of a Bernoulli success-probability estimator
// over p in [1/2, 1], scanned on a grid with the exact binomial expectation
// at each point. The empirical estimator X/n peaks at p = 1/2 with value
// 1/(4n); the shifted estimator (X + sqrt(n)/2)/(n + sqrt(n)) has constant
// risk 1/(4(1+sqrt(n))^2).
WorstCaseRisk bernoulli_worst_case_risk(std::int64_t n, BernoulliEstimator kind,
                                        std::int64_t grid_size);

struct TailConcentrationResult {
  double violation_rate = 0.0;
  double max_gap = 0.0;
};

// Simulates the half-mass family with ceil(e^n) tail symbols and checks that
// the missing mass stays within (1-p0)*n*e^(-n) of 1-p0 except when symbol 0
// goes unseen, which happens with probability at most 2^(-n). Returns the
// observed violation rate and the largest gap among conforming replicates.
// Guarded to 8 <= n <= 14 so the tail alphabet fits in memory.
TailConcentrationResult tail_concentration_check(std::int64_t n, double p0,
                                                 std::int64_t reps, std::uint64_t seed,
                                                 Exec exec = Exec::parallel);

struct MinimaxBracket {
  BoundReport lower;  // 0.25/n via reduction to Bernoulli estimation
  BoundReport upper;  // (0.25 + e^{-1})/n via the Good-Turing worst case
};

MinimaxBracket minimax_bracket(std::int64_t n);

}  // namespace mm
