#include "fqhe/thermo.hpp"

#include <cmath>
#include <numbers>

#include "fqhe/compensated_sum.hpp"
#include "fqhe/special_functions.hpp"

namespace fqhe {

ThermalContext ThermalContext::from_temperature(double temperature, double boltzmann) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw std::invalid_argument("temperature must be positive");
  }
  if (!(boltzmann > 0.0)) {
    throw std::invalid_argument("Boltzmann constant must be positive");
  }
  return {temperature, 1.0 / (boltzmann * temperature)};
}

ThermalContext ThermalContext::from_inverse_temperature(double inverse_temperature,
                                                        double boltzmann) {
  if (!(inverse_temperature > 0.0) || !std::isfinite(inverse_temperature)) {
    throw std::invalid_argument("inverse temperature must be positive");
  }
  if (!(boltzmann > 0.0)) {
    throw std::invalid_argument("Boltzmann constant must be positive");
  }
  return {1.0 / (boltzmann * inverse_temperature), inverse_temperature};
}

void SeriesControl::validate() const {
  if (!(tolerance > 0.0 && tolerance <= 1e-6)) {
    throw std::invalid_argument("tolerance must lie in (0, 1e-6]");
  }
  if (max_terms < 1) {
    throw std::invalid_argument("max_terms must be >= 1");
  }
}

namespace {

// Running sums over levels n >= 2 of the shifted Boltzmann weights
// w_n = exp(-theta (n^alpha - 1)) and of (n^alpha - 1) w_n. Level 1
// contributes exactly 1 and 0 and is kept out of the accumulators so that
// ln S = log1p(rest) stays accurate when the excited levels are tiny.
class LevelSums {
public:
  LevelSums(const WellSpec& spec, const ThermalContext& ctx)
      : alpha_(spec.alpha),
        ground_energy_(energy_level(spec, 1).energy),
        theta_(ctx.inverse_temperature() * ground_energy_),
        log_degeneracy_(spec.divided ? std::numbers::ln2 : 0.0) {}

  [[nodiscard]] double theta() const noexcept { return theta_; }
  [[nodiscard]] std::int64_t terms() const noexcept { return terms_; }
  [[nodiscard]] double shifted_sum() const noexcept { return 1.0 + rest_.value(); }

  // Excitation n^alpha - 1 of level n in units of E_1.
  [[nodiscard]] double excitation(std::int64_t n) const {
    return std::expm1(alpha_ * std::log(static_cast<double>(n)));
  }

  [[nodiscard]] double weight(double excitation) const { return std::exp(-theta_ * excitation); }

  void push(double excitation, double weight) {
    rest_ += weight;
    moment_ += excitation * weight;
    ++terms_;
  }

  // ln of the bound on the neglected tail past the current level, relative
  // to the current partial sum.
  [[nodiscard]] double log_relative_tail() const {
    return theta_ + log_integral_tail_bound(theta_, alpha_, terms_) - std::log1p(rest_.value());
  }

  [[nodiscard]] CanonicalState state() const {
    CanonicalState out;
    auto& p = out.partition;
    p.terms_used = terms_;
    p.tail_bound = std::exp(log_relative_tail());
    p.reduced_gap = theta_;
    p.ground_energy = ground_energy_;
    p.log_degeneracy = log_degeneracy_;
    p.log_shifted_sum = std::log1p(rest_.value());
    p.log_z = (log_degeneracy_ - theta_) + p.log_shifted_sum;
    out.excess_energy = ground_energy_ * moment_.value() / shifted_sum();
    out.internal_energy = ground_energy_ + out.excess_energy;
    return out;
  }

private:
  double alpha_;
  double ground_energy_;
  double theta_;
  double log_degeneracy_;
  CompensatedSum rest_;
  CompensatedSum moment_;
  std::int64_t terms_ = 1;
};

} // namespace

CanonicalState canonical_state(const WellSpec& spec, const ThermalContext& ctx,
                               const SeriesControl& control) {
  spec.validate();
  control.validate();
  LevelSums sums(spec, ctx);
  const double log_tolerance = std::log(control.tolerance);
  for (;;) {
    const std::int64_t next = sums.terms() + 1;
    const double x = sums.excitation(next);
    const double w = sums.weight(x);
    if (w < control.tolerance * sums.shifted_sum() && sums.log_relative_tail() <= log_tolerance) {
      return sums.state();
    }
    if (sums.terms() >= control.max_terms) {
      CanonicalState partial = sums.state();
      throw TruncationError("partition sum did not converge within " +
                                std::to_string(control.max_terms) + " terms (tail bound " +
                                std::to_string(partial.partition.tail_bound) + ")",
                            partial);
    }
    sums.push(x, w);
  }
}

CanonicalState canonical_state_fixed_terms(const WellSpec& spec, const ThermalContext& ctx,
                                           std::int64_t terms) {
  spec.validate();
  if (terms < 1) {
    throw std::invalid_argument("terms must be >= 1");
  }
  LevelSums sums(spec, ctx);
  for (std::int64_t n = 2; n <= terms; ++n) {
    const double x = sums.excitation(n);
    sums.push(x, sums.weight(x));
  }
  return sums.state();
}

LogPartitionResult log_partition(const WellSpec& spec, const ThermalContext& ctx,
                                 double tolerance) {
  return log_partition(spec, ctx, SeriesControl{tolerance});
}

LogPartitionResult log_partition(const WellSpec& spec, const ThermalContext& ctx,
                                 const SeriesControl& control) {
  return canonical_state(spec, ctx, control).partition;
}

double internal_energy(const WellSpec& spec, const ThermalContext& ctx, double tolerance) {
  return internal_energy(spec, ctx, SeriesControl{tolerance});
}

double internal_energy(const WellSpec& spec, const ThermalContext& ctx,
                       const SeriesControl& control) {
  return canonical_state(spec, ctx, control).internal_energy;
}

double helmholtz_free_energy(const WellSpec& spec, const ThermalContext& ctx, double tolerance) {
  return helmholtz_free_energy(spec, ctx, SeriesControl{tolerance});
}

double helmholtz_free_energy(const WellSpec& spec, const ThermalContext& ctx,
                             const SeriesControl& control) {
  return -ctx.thermal_energy() * log_partition(spec, ctx, control).log_z;
}

} // namespace fqhe
