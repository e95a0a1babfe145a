#pragma once

#include <cstdint>

#include "fqhe/constants.hpp"

namespace fqhe {

/// One box of the engine: a particle of mass `mass` in an infinite well
/// spanning [-half_width, half_width], with a space-fractional kinetic term
/// of order `alpha`. A divided box has a thin barrier at x = 0.
struct WellSpec {
  double mass = constants::electron_mass; // kg
  double alpha = 2.0;                     // 0 < alpha <= 2
  double chi = 0.5;
  double half_width = 1e-9; // m
  bool divided = false;

  /// Throws std::invalid_argument if any field is out of range.
  void validate() const;

  [[nodiscard]] WellSpec with_divided(bool value) const {
    WellSpec copy = *this;
    copy.divided = value;
    return copy;
  }
};

struct EnergyLevel {
  std::int64_t n = 0;
  double energy = 0.0; // J
  int degeneracy = 1;
};

/// Fractional kinetic coefficient chi m c^2 / (m c)^alpha.
[[nodiscard]] double d_alpha(const WellSpec& spec);

/// Momentum scale n pi hbar / (2a) of the n-th undivided level.
[[nodiscard]] double level_momentum(const WellSpec& spec, std::int64_t n);

/// Energy eigenvalue and degeneracy of level n >= 1.
///
/// Undivided boxes have E_n = D_alpha (n pi hbar / 2a)^alpha. A barrier
/// halves the width, so level n of a divided box is level 2n of the same
/// undivided box, and it is two-fold degenerate (one copy per half).
[[nodiscard]] EnergyLevel energy_level(const WellSpec& spec, std::int64_t n);

/// beta * E_1: the reduced ground-state gap.
[[nodiscard]] double ground_reduced_gap(const WellSpec& spec, double inverse_temperature);

/// beta * E_n = theta_1 * n^alpha.
[[nodiscard]] double reduced_gap(const WellSpec& spec, double inverse_temperature, std::int64_t n);

/// Half-width at which the ground level of `spec` (divided flag honoured)
/// has reduced gap `theta` at the given inverse temperature.
[[nodiscard]] double half_width_for_reduced_gap(const WellSpec& spec, double inverse_temperature,
                                                double theta);

} // namespace fqhe
