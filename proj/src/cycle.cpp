#include "fqhe/cycle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fqhe {

void CycleConfig::validate() const {
  well.validate();
  series.validate();
  if (!(cold_temperature > 0.0) || !std::isfinite(hot_temperature)) {
    throw std::invalid_argument("bath temperatures must be positive and finite");
  }
  if (!(hot_temperature >= cold_temperature)) {
    throw std::invalid_argument("hot temperature must be >= cold temperature");
  }
}

CycleCorners evaluate_corners(const CycleConfig& cfg) {
  cfg.validate();
  const WellSpec open = cfg.well.with_divided(false);
  const WellSpec split = cfg.well.with_divided(true);
  const ThermalContext hot = cfg.hot();
  const ThermalContext cold = cfg.cold();
  return {
      canonical_state(open, hot, cfg.series),
      canonical_state(split, hot, cfg.series),
      canonical_state(split, cold, cfg.series),
      canonical_state(open, cold, cfg.series),
  };
}

namespace {

// k_B T ln(Z_divided / Z_undivided) without its ground-state part
// -(E1_divided - E1_undivided). That part is identical at both baths, so it
// drops out of the heats and the work exactly.
double reduced_free_energy_gain(const CanonicalState& divided, const CanonicalState& undivided,
                                const ThermalContext& ctx) {
  const auto& p = divided.partition;
  const auto& q = undivided.partition;
  const double log_ratio =
      (p.log_degeneracy - q.log_degeneracy) + (p.log_shifted_sum - q.log_shifted_sum);
  return ctx.thermal_energy() * log_ratio;
}

} // namespace

double heat_isothermal_insertion(const CycleCorners& k, const CycleConfig& cfg) {
  // U_B - U_A = (E1_B - E1_A) + (ex_B - ex_A); the E1 difference cancels
  // against the ground-state part of k_B T_h ln(Z_B / Z_A).
  return (k.b.excess_energy - k.a.excess_energy) + reduced_free_energy_gain(k.b, k.a, cfg.hot());
}

double heat_isothermal_insertion(const CycleConfig& cfg) {
  return heat_isothermal_insertion(evaluate_corners(cfg), cfg);
}

double heat_isothermal_removal(const CycleCorners& k, const CycleConfig& cfg) {
  return (k.d.excess_energy - k.c.excess_energy) - reduced_free_energy_gain(k.c, k.d, cfg.cold());
}

double heat_isothermal_removal(const CycleConfig& cfg) {
  return heat_isothermal_removal(evaluate_corners(cfg), cfg);
}

double heat_isochoric(const CycleCorners& k, IsochoricStage stage) {
  // Same geometry on both ends, so the ground energies are equal.
  switch (stage) {
  case IsochoricStage::BC:
    return k.c.excess_energy - k.b.excess_energy;
  case IsochoricStage::DA:
    return k.a.excess_energy - k.d.excess_energy;
  }
  return 0.0;
}

double heat_isochoric(const CycleConfig& cfg, IsochoricStage stage) {
  return heat_isochoric(evaluate_corners(cfg), stage);
}

double work(const CycleCorners& k, const CycleConfig& cfg) {
  return reduced_free_energy_gain(k.b, k.a, cfg.hot()) -
         reduced_free_energy_gain(k.c, k.d, cfg.cold());
}

double work(const CycleConfig& cfg) { return work(evaluate_corners(cfg), cfg); }

std::optional<double> efficiency(const CycleResult& r) {
  const double heat_in = r.q_da + r.q_ab;
  if (!(r.work > 0.0) || !(heat_in > 0.0)) {
    return std::nullopt;
  }
  return 1.0 + (r.q_bc + r.q_cd) / heat_in;
}

CycleResult run_cycle(const CycleConfig& cfg) {
  const CycleCorners k = evaluate_corners(cfg);

  CycleResult r;
  r.q_ab = heat_isothermal_insertion(k, cfg);
  r.q_bc = heat_isochoric(k, IsochoricStage::BC);
  r.q_cd = heat_isothermal_removal(k, cfg);
  r.q_da = heat_isochoric(k, IsochoricStage::DA);
  r.u_a = k.a.internal_energy;
  r.u_b = k.b.internal_energy;
  r.u_c = k.c.internal_energy;
  r.u_d = k.d.internal_energy;
  r.log_z_a = k.a.partition.log_z;
  r.log_z_b = k.b.partition.log_z;
  r.log_z_c = k.c.partition.log_z;
  r.log_z_d = k.d.partition.log_z;
  r.work = work(k, cfg);
  r.efficiency = efficiency(r);
  r.first_law_residual = r.work - (r.q_ab + r.q_bc + r.q_cd + r.q_da);

  for (const CanonicalState* s : {&k.a, &k.b, &k.c, &k.d}) {
    r.terms_used_max = std::max(r.terms_used_max, s->partition.terms_used);
    r.tail_bound_max = std::max(r.tail_bound_max, s->partition.tail_bound);
  }

  const double scale = std::max(std::fabs(r.work), cfg.hot().thermal_energy());
  if (!(std::fabs(r.first_law_residual) <= 1e-10 * scale)) {
    throw FirstLawViolation("first-law residual " + std::to_string(r.first_law_residual) +
                                " J exceeds 1e-10 of " + std::to_string(scale) + " J",
                            r);
  }
  return r;
}

} // namespace fqhe
