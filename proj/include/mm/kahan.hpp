#pragma once

#include <cmath>

namespace mm {

// Neumaier-compensated accumulator. value() folds the carry back into the sum,
// so merging two accumulators is just adding the other's sum and carry.
struct Kahan {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }

  void merge(const Kahan& other) {
    add(other.sum);
    add(other.carry);
  }

  double value() const { return sum + carry; }
};

}  // namespace mm
