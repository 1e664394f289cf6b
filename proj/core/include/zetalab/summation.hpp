#pragma once

#include <vector>

namespace zetalab {

// Exact floating-point accumulator (Shewchuk's non-overlapping partials).
// The represented sum is exact, and value() returns it correctly rounded, so
// the result is independent of the order in which terms or partial
// accumulators are combined. All reductions in the library go through this.
class ExactSum {
 public:
  ExactSum() = default;

  void add(double x);
  void merge(const ExactSum& other);
  double value() const;

  ExactSum& operator+=(double x) {
    add(x);
    return *this;
  }

 private:
  std::vector<double> partials_;
};

}  // namespace zetalab
