#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "fqhe/constants.hpp"
#include "fqhe/spectrum.hpp"

namespace fqhe {

/// Bath temperature with its cached inverse beta = 1 / (k_B T).
class ThermalContext {
public:
  static ThermalContext from_temperature(double temperature,
                                         double boltzmann = constants::boltzmann);
  static ThermalContext from_inverse_temperature(double inverse_temperature,
                                                 double boltzmann = constants::boltzmann);

  [[nodiscard]] double temperature() const noexcept { return temperature_; }
  [[nodiscard]] double inverse_temperature() const noexcept { return beta_; }
  /// k_B T, in joules.
  [[nodiscard]] double thermal_energy() const noexcept { return 1.0 / beta_; }

private:
  ThermalContext(double temperature, double beta) : temperature_(temperature), beta_(beta) {}

  double temperature_;
  double beta_;
};

/// Truncation controls for the canonical sums.
struct SeriesControl {
  double tolerance = 1e-14;           // relative; must lie in (0, 1e-6]
  std::int64_t max_terms = 10'000'000;

  void validate() const;
};

/// ln Z for one box, with how it was obtained.
///
/// The sum is stored shifted by the ground state,
///   ln Z = -theta_1 + ln g + ln S,   S = sum_n exp(-theta_1 (n^alpha - 1)),
/// so differences of ln Z between boxes can be formed without the large
/// -theta_1 parts ever meeting in floating point.
struct LogPartitionResult {
  double log_z = 0.0;
  std::int64_t terms_used = 0;
  double tail_bound = 0.0; // bound on the neglected tail relative to S

  double reduced_gap = 0.0;        // theta_1 = beta E_1
  double ground_energy = 0.0;      // E_1, J
  double log_degeneracy = 0.0;     // ln g
  double log_shifted_sum = 0.0;    // ln S >= 0
};

/// Everything a cycle corner needs from one pass over the levels.
struct CanonicalState {
  LogPartitionResult partition;
  double excess_energy = 0.0; // U - E_1, J
  double internal_energy = 0.0;
};

/// Thrown when the term cap is reached before the tail bound drops below
/// the tolerance. Carries the partial result and the bound achieved.
class TruncationError : public std::runtime_error {
public:
  TruncationError(const std::string& what, CanonicalState partial)
      : std::runtime_error(what), partial_(partial) {}

  [[nodiscard]] const CanonicalState& partial() const noexcept { return partial_; }

private:
  CanonicalState partial_;
};

/// Single pass over the spectrum giving ln Z and U together.
///
/// Terms are accumulated in increasing n with compensated summation. The
/// sum stops at the first N for which the next term is below
/// tolerance * S and the integral tail bound past N is below tolerance * S.
[[nodiscard]] CanonicalState canonical_state(const WellSpec& spec, const ThermalContext& ctx,
                                             const SeriesControl& control = {});

/// Same sums over exactly `terms` levels, no stopping rule. tail_bound is
/// still reported.
[[nodiscard]] CanonicalState canonical_state_fixed_terms(const WellSpec& spec,
                                                         const ThermalContext& ctx,
                                                         std::int64_t terms);

[[nodiscard]] LogPartitionResult log_partition(const WellSpec& spec, const ThermalContext& ctx,
                                               double tolerance);
[[nodiscard]] LogPartitionResult log_partition(const WellSpec& spec, const ThermalContext& ctx,
                                               const SeriesControl& control = {});

/// U = -d ln Z / d beta.
[[nodiscard]] double internal_energy(const WellSpec& spec, const ThermalContext& ctx,
                                     double tolerance);
[[nodiscard]] double internal_energy(const WellSpec& spec, const ThermalContext& ctx,
                                     const SeriesControl& control = {});

/// F = -k_B T ln Z.
[[nodiscard]] double helmholtz_free_energy(const WellSpec& spec, const ThermalContext& ctx,
                                           double tolerance);
[[nodiscard]] double helmholtz_free_energy(const WellSpec& spec, const ThermalContext& ctx,
                                           const SeriesControl& control = {});

} // namespace fqhe
