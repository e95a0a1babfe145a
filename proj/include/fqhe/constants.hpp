#pragma once

#include <numbers>

namespace fqhe::constants {

// Exact SI (2019) values.
inline constexpr double planck = 6.62607015e-34;      // J s
inline constexpr double boltzmann = 1.380649e-23;     // J / K
inline constexpr double speed_of_light = 299792458.0; // m / s
inline constexpr double reduced_planck = planck / (2.0 * std::numbers::pi);

inline constexpr double electron_mass = 9.11e-31; // kg, the value used for the reference curves

} // namespace fqhe::constants
