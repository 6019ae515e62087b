#pragma once

#include <cmath>

namespace eulergas::numeric {

/// Compensated (Neumaier) accumulator.
class CompensatedSum {
 public:
  void add(double term) noexcept {
    const double t = sum_ + term;
    if (std::fabs(sum_) >= std::fabs(term))
      carry_ += (sum_ - t) + term;
    else
      carry_ += (term - t) + sum_;
    sum_ = t;
  }
  CompensatedSum& operator+=(double term) noexcept {
    add(term);
    return *this;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace eulergas::numeric
