#pragma once

#include <cmath>

namespace fqhe {

/// Neumaier's variant of Kahan summation.
///
/// The running error is carried separately and folded back in on read, so a
/// long series of decreasing terms keeps its relative error near one ulp
/// instead of growing with the term count.
struct CompensatedSum {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double value) noexcept {
    const double t = sum + value;
    if (std::fabs(sum) >= std::fabs(value)) {
      compensation += (sum - t) + value;
    } else {
      compensation += (value - t) + sum;
    }
    sum = t;
  }

  CompensatedSum& operator+=(double value) noexcept {
    add(value);
    return *this;
  }

  [[nodiscard]] double value() const noexcept { return sum + compensation; }
};

} // namespace fqhe
