#pragma once
// Correctly rounded running sums (Shewchuk non-overlapping partials, final
// rounding as in Python's math.fsum). Used where a cumulative series must
// reproduce its telescoped endpoint exactly.

#include <vector>

namespace tvc {

/// hi + lo == a - b exactly, hi == fl(a - b).
struct TwoTerm {
  double hi = 0.0;
  double lo = 0.0;
};
TwoTerm exact_difference(double a, double b) noexcept;

class ExactSum {
 public:
  void add(double x);
  /// The exact sum of everything added so far, rounded once to nearest-even.
  double value() const;

 private:
  std::vector<double> partials_;
};

}  // namespace tvc
