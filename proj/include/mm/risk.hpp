#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "mm/dist.hpp"
#include "mm/estimators.hpp"
#include "mm/optimize.hpp"
#include "mm/parallel.hpp"

namespace mm {

// Thrown when a computation would exceed an explicit size guard (for example
// brute-force enumeration past its sequence budget).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RiskMethod { exact, asymptotic, closed_form_uniform, brute_force, monte_carlo };
std::string to_string(RiskMethod m);

struct RiskReport {
  std::int64_t n = 0;
  std::string dist;
  RiskMethod method = RiskMethod::exact;
  double risk = 0.0;
  double normalized_risk = 0.0;  // n * risk
  std::optional<double> std_error;  // Monte Carlo only
  std::optional<double> pair_term;  // exact breakdown: off-diagonal share
  std::optional<double> diag_term;  // exact breakdown: diagonal share
};

// (1-x)^m as exp(m*log1p(-x)); 0^0 = 1, and x >= 1 gives 0 for m > 0.
double pow_one_minus(double x, std::int64_t m);

enum class RiskPath {
  automatic,  // collapse symmetric families to their distinct term classes
  general,    // force the O(k^2) pair kernel
};

// Exact squared-error risk of the Good-Turing estimator: the ordered-pair
// kernel sum plus the per-symbol diagonal term, all divided by n.
RiskReport exact_risk_gt(const Distribution& d, std::int64_t n,
                         RiskPath path = RiskPath::automatic,
                         Exec exec = Exec::parallel);

// Same value for the uniform distribution on k symbols, collapsed to O(1).
RiskReport exact_risk_gt_uniform(std::int64_t k, std::int64_t n);

// Leading term of the Good-Turing risk expansion,
// (1/n) E[2*count(2)/n + (count(1)/n)(1 - count(1)/n)],
// evaluated exactly through closed-form occupancy moments.
RiskReport asymptotic_risk_gt(const Distribution& d, std::int64_t n,
                              Exec exec = Exec::parallel);

// E[estimate] - E[missing mass] for Good-Turing: sum_u p(u)^2 (1-p(u))^(n-1).
// Nonnegative and at most 1/n.
double exact_bias_gt(const Distribution& d, std::int64_t n);

// Normalized-risk coefficient of Good-Turing on the uniform family with
// support c*n: (1/c + 1) e^(-1/c) - e^(-2/c).
double gt_uniform_risk_coefficient(double c);

// Golden-section maximization of the coefficient over log c in [1e-2, 1e2].
ScalarMax maximize_gt_uniform_coefficient();

// Worst-case normalized-risk ceiling for Good-Turing: 0.25 + e^{-1}.
double gt_upper_bound_constant();

// Exact risk of any estimator by enumerating all k^n sequences, each weighted
// by its product probability. Guarded at 10^7 sequences.
RiskReport brute_force_risk(const Distribution& d, std::int64_t n, const Estimator& e,
                            Exec exec = Exec::parallel);

struct InequalityCheck {
  double lhs = 0.0;
  double bound = 0.0;
  // relative slack 1e-9 absorbs summation noise
  bool holds() const { return lhs <= bound * (1.0 + 1e-9); }
};

// sum_u p(u)^i (1-p(u))^n against the factorial-ratio ceiling
// (i-1)! n! / (n+i-1)!, evaluated through log-gamma.
InequalityCheck check_power_sum_bound(const Distribution& d, int i, std::int64_t n);

// sum_{u != v} p(u)^i p(v)^j (1-p(u)-p(v))^n against
// (i-1)! (j-1)! n! / (n+i+j-2)!.
InequalityCheck check_pair_power_sum_bound(const Distribution& d, int i, int j,
                                           std::int64_t n, Exec exec = Exec::parallel);

// n * sum_{u != v} p(u)p(v)(1-p(u)-p(v))^(n-2) (p(u)+p(v))^2 — the pair
// remainder the risk expansion drops; decays with n.
double pair_remainder_scaled(const Distribution& d, std::int64_t n,
                             Exec exec = Exec::parallel);

}  // namespace mm
