#pragma once

#include <cstdint>

namespace fqhe {

/// ln Gamma(s, x), the upper incomplete gamma function, for s > 0, x >= 0.
///
/// Power series for x < s + 1, modified Lentz continued fraction otherwise.
/// Working in the log keeps arguments like x ~ 1e8 representable.
[[nodiscard]] double log_upper_incomplete_gamma(double s, double x);

[[nodiscard]] double upper_incomplete_gamma(double s, double x);

/// Log of an upper bound on sum_{n > n_cut} exp(-theta n^alpha).
///
/// The summand is decreasing in n, so the sum is dominated by the integral
/// from n_cut to infinity, which is Gamma(1/alpha, theta n_cut^alpha) /
/// (alpha theta^(1/alpha)).
[[nodiscard]] double log_integral_tail_bound(double theta, double alpha, std::int64_t n_cut);

[[nodiscard]] double integral_tail_bound(double theta, double alpha, std::int64_t n_cut);

} // namespace fqhe
