#pragma once
// Small shared helpers.

namespace meanomega {

// Kahan compensated accumulator; mandatory for prime sums above 1e7 terms.
struct Kahan {
  double sum = 0.0, c = 0.0;
  void add(double v) {
    double y = v - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

} // namespace meanomega
