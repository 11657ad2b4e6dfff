#pragma once

#include <cmath>

namespace bwak {

/// Neumaier compensated summation. Long runs (10^7 rounds) accumulate costs
/// that are compared against c*t with a 1e-9 tolerance.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace bwak
