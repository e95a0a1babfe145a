#include "fqhe/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fqhe {

void WellSpec::validate() const {
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    throw std::invalid_argument("alpha must lie in (0, 2], got " + std::to_string(alpha));
  }
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::invalid_argument("mass must be positive");
  }
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw std::invalid_argument("half_width must be positive");
  }
  if (!(chi > 0.0) || !std::isfinite(chi)) {
    throw std::invalid_argument("chi must be positive");
  }
}

double d_alpha(const WellSpec& spec) {
  spec.validate();
  const double m = spec.mass;
  if (spec.alpha == 2.0) {
    // c cancels exactly
    return spec.chi / m;
  }
  const double mc = m * constants::speed_of_light;
  return spec.chi * mc * constants::speed_of_light / std::pow(mc, spec.alpha);
}

double level_momentum(const WellSpec& spec, std::int64_t n) {
  return static_cast<double>(n) * std::numbers::pi * constants::reduced_planck /
         (2.0 * spec.half_width);
}

EnergyLevel energy_level(const WellSpec& spec, std::int64_t n) {
  if (n < 1) {
    throw std::invalid_argument("quantum number must be >= 1, got " + std::to_string(n));
  }
  if (spec.divided) {
    EnergyLevel level = energy_level(spec.with_divided(false), 2 * n);
    level.n = n;
    level.degeneracy = 2;
    return level;
  }
  const double p = level_momentum(spec, n);
  return {n, d_alpha(spec) * std::pow(p, spec.alpha), 1};
}

double ground_reduced_gap(const WellSpec& spec, double inverse_temperature) {
  if (!(inverse_temperature > 0.0)) {
    throw std::invalid_argument("inverse temperature must be positive");
  }
  return inverse_temperature * energy_level(spec, 1).energy;
}

double reduced_gap(const WellSpec& spec, double inverse_temperature, std::int64_t n) {
  if (n < 1) {
    throw std::invalid_argument("quantum number must be >= 1, got " + std::to_string(n));
  }
  const double theta1 = ground_reduced_gap(spec, inverse_temperature);
  return theta1 * std::pow(static_cast<double>(n), spec.alpha);
}

double half_width_for_reduced_gap(const WellSpec& spec, double inverse_temperature, double theta) {
  if (!(theta > 0.0) || !(inverse_temperature > 0.0)) {
    throw std::invalid_argument("theta and inverse temperature must be positive");
  }
  // theta = beta D (k pi hbar / 2a)^alpha with k = 1 (undivided) or 2 (divided)
  WellSpec probe = spec;
  probe.half_width = 1.0;
  probe.validate();
  const double k = spec.divided ? 2.0 : 1.0;
  const double energy_scale = d_alpha(probe) * std::pow(k * std::numbers::pi * constants::reduced_planck / 2.0, spec.alpha);
  return std::pow(inverse_temperature * energy_scale / theta, 1.0 / spec.alpha);
}

} // namespace fqhe
