#pragma once

#include <optional>
#include <stdexcept>

#include "fqhe/spectrum.hpp"
#include "fqhe/thermo.hpp"

namespace fqhe {

/// Geometry and baths for one Stirling-like Szilard cycle.
///
/// Corners: A = (undivided, T_h), B = (divided, T_h), C = (divided, T_c),
/// D = (undivided, T_c). A->B inserts the barrier at T_h, B->C and D->A swap
/// baths at fixed geometry, C->D removes the barrier at T_c.
struct CycleConfig {
  WellSpec well;               // `divided` is ignored
  double hot_temperature = 2.0;  // K
  double cold_temperature = 1.0; // K
  SeriesControl series;
  double boltzmann = constants::boltzmann;

  void validate() const;

  [[nodiscard]] ThermalContext hot() const {
    return ThermalContext::from_temperature(hot_temperature, boltzmann);
  }
  [[nodiscard]] ThermalContext cold() const {
    return ThermalContext::from_temperature(cold_temperature, boltzmann);
  }
};

enum class Corner { A, B, C, D };

/// The four canonical states of a cycle, each evaluated once.
struct CycleCorners {
  CanonicalState a, b, c, d;
};

/// Heats are positive when absorbed by the particle; work is positive when
/// extracted.
struct CycleResult {
  double q_ab = 0.0, q_bc = 0.0, q_cd = 0.0, q_da = 0.0;
  double u_a = 0.0, u_b = 0.0, u_c = 0.0, u_d = 0.0;
  double log_z_a = 0.0, log_z_b = 0.0, log_z_c = 0.0, log_z_d = 0.0;
  double work = 0.0;
  std::optional<double> efficiency; // empty outside the engine regime
  double first_law_residual = 0.0;  // W - sum of heats

  std::int64_t terms_used_max = 0;
  double tail_bound_max = 0.0;
};

class FirstLawViolation : public std::runtime_error {
public:
  FirstLawViolation(const std::string& what, CycleResult result)
      : std::runtime_error(what), result_(result) {}

  [[nodiscard]] const CycleResult& result() const noexcept { return result_; }

private:
  CycleResult result_;
};

[[nodiscard]] CycleCorners evaluate_corners(const CycleConfig& cfg);

/// Q_AB = U_B - U_A + k_B T_h ln(Z_B / Z_A).
[[nodiscard]] double heat_isothermal_insertion(const CycleCorners& corners, const CycleConfig& cfg);
[[nodiscard]] double heat_isothermal_insertion(const CycleConfig& cfg);

/// Q_CD = U_D - U_C + k_B T_c ln(Z_D / Z_C).
[[nodiscard]] double heat_isothermal_removal(const CycleCorners& corners, const CycleConfig& cfg);
[[nodiscard]] double heat_isothermal_removal(const CycleConfig& cfg);

enum class IsochoricStage { BC, DA };

/// Q_BC = U_C - U_B, Q_DA = U_A - U_D.
[[nodiscard]] double heat_isochoric(const CycleCorners& corners, IsochoricStage stage);
[[nodiscard]] double heat_isochoric(const CycleConfig& cfg, IsochoricStage stage);

/// W = k_B T_h ln(Z_B / Z_A) - k_B T_c ln(Z_C / Z_D).
[[nodiscard]] double work(const CycleCorners& corners, const CycleConfig& cfg);
[[nodiscard]] double work(const CycleConfig& cfg);

/// eta = 1 + (Q_BC + Q_CD) / (Q_DA + Q_AB) when W > 0 and Q_DA + Q_AB > 0.
[[nodiscard]] std::optional<double> efficiency(const CycleResult& result);

/// Full cycle with a first-law audit. Throws TruncationError from any
/// corner, or FirstLawViolation if |W - sum Q| > 1e-10 max(|W|, k_B T_h).
[[nodiscard]] CycleResult run_cycle(const CycleConfig& cfg);

} // namespace fqhe
