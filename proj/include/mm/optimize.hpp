#pragma once

#include <cmath>

namespace mm {

struct ScalarMax {
  double arg = 0.0;
  double value = 0.0;
};

// Derivative-free golden-section maximization on [lo, hi]; stops when the
// bracket is narrower than tol.
template <class F>
ScalarMax golden_section_max(F&& f, double lo, double hi, double tol) {
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = f(d);
    }
  }
  const double x = (a + b) / 2;
  return {x, f(x)};
}

}  // namespace mm
