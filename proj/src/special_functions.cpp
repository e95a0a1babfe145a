#include "fqhe/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fqhe {
namespace {

constexpr double kEpsilon = std::numeric_limits<double>::epsilon();
constexpr int kMaxIterations = 100000;

// ln of the regularized lower gamma P(s, x), by series. Requires x > 0.
double log_lower_regularized_series(double s, double x) {
  double term = 1.0 / s;
  double sum = term;
  for (int k = 1; k < kMaxIterations; ++k) {
    term *= x / (s + k);
    sum += term;
    if (term < sum * kEpsilon) {
      break;
    }
  }
  return s * std::log(x) - x - std::lgamma(s) + std::log(sum);
}

// ln Gamma(s, x) via the continued fraction, x >= s + 1.
double log_upper_continued_fraction(double s, double x) {
  constexpr double tiny = std::numeric_limits<double>::min() / kEpsilon;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) {
      d = tiny;
    }
    c = b + an / c;
    if (std::fabs(c) < tiny) {
      c = tiny;
    }
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEpsilon) {
      break;
    }
  }
  return s * std::log(x) - x + std::log(h);
}

} // namespace

double log_upper_incomplete_gamma(double s, double x) {
  if (!(s > 0.0) || !(x >= 0.0)) {
    throw std::invalid_argument("upper incomplete gamma needs s > 0 and x >= 0");
  }
  if (x == 0.0) {
    return std::lgamma(s);
  }
  if (x < s + 1.0) {
    const double log_p = log_lower_regularized_series(s, x);
    return std::lgamma(s) + std::log1p(-std::exp(log_p));
  }
  return log_upper_continued_fraction(s, x);
}

double upper_incomplete_gamma(double s, double x) {
  return std::exp(log_upper_incomplete_gamma(s, x));
}

double log_integral_tail_bound(double theta, double alpha, std::int64_t n_cut) {
  if (!(theta > 0.0) || !(alpha > 0.0 && alpha <= 2.0) || n_cut < 1) {
    throw std::invalid_argument("tail bound needs theta > 0, 0 < alpha <= 2, n_cut >= 1");
  }
  const double s = 1.0 / alpha;
  const double x = theta * std::pow(static_cast<double>(n_cut), alpha);
  return log_upper_incomplete_gamma(s, x) - std::log(alpha) - s * std::log(theta);
}

double integral_tail_bound(double theta, double alpha, std::int64_t n_cut) {
  return std::exp(log_integral_tail_bound(theta, alpha, n_cut));
}

} // namespace fqhe
