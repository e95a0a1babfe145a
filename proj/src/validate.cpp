#include "fqhe/validate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "fqhe/compensated_sum.hpp"
#include "fqhe/reference_data.hpp"

namespace fqhe {

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

double relative(double value, double reference) {
  const double diff = std::fabs(value - reference);
  return reference == 0.0 ? diff : diff / std::fabs(reference);
}

// Tracks the worst residual of a check and whether it stayed under its limit.
struct Worst {
  explicit Worst(double limit_) : limit(limit_) {}

  double limit;
  double value = 0.0;
  bool ok = true;
  std::string where;

  void observe(double residual, const std::string& label) {
    if (!(residual <= limit)) {
      ok = false;
    }
    if (!(residual <= value)) {
      value = residual;
      where = label;
    }
  }

  CheckResult result(std::string name) const {
    return {std::move(name), ok, value, limit, where.empty() ? "" : "worst at " + where};
  }
};

std::string label(double alpha, double a_nm) {
  std::ostringstream s;
  s << "alpha=" << alpha << " a=" << a_nm << "nm";
  return s.str();
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

class Validator {
public:
  explicit Validator(const ValidationOptions& options) : options_(options) {
    base_.well.mass = kReferenceMass;
    base_.well.chi = kReferenceChi;
    base_.hot_temperature = kReferenceHot;
    base_.cold_temperature = kReferenceCold;
    base_.boltzmann = constants::boltzmann * options.boltzmann_scale;
    base_.series.max_terms = options.max_terms;
  }

  ValidationReport run() {
    ValidationReport report;
    const auto guarded = [&](const std::string& name, const std::function<void()>& body) {
      const std::size_t before = report.checks.size();
      try {
        body();
      } catch (const std::exception& e) {
        report.checks.resize(before);
        report.checks.push_back({name, false, 0.0, 0.0, std::string("error: ") + e.what()});
      }
    };

    guarded("oracle equivalence", [&] { oracle_checks(report); });
    guarded("default sweep", [&] { sweep_checks(report); });
    guarded("zero-gradient cycle", [&] { report.checks.push_back(zero_gradient()); });
    guarded("derivative consistency", [&] { report.checks.push_back(derivative_consistency()); });
    guarded("degeneracy factor", [&] { report.checks.push_back(degeneracy_factor()); });
    guarded("truncation stability", [&] { report.checks.push_back(truncation_stability()); });
    guarded("szilard limit", [&] { report.checks.push_back(szilard_limit()); });
    guarded("classical limit", [&] { report.checks.push_back(classical_limit()); });
    return report;
  }

private:
  CycleConfig at(double alpha, double half_width) const {
    CycleConfig cfg = base_;
    cfg.well.alpha = alpha;
    cfg.well.half_width = half_width;
    return cfg;
  }

  void oracle_checks(ValidationReport& report) const {
    Worst log_z{1e-12}, energy{1e-10}, work{1e-10}, eta{1e-10};
    for (const ReferencePoint& p : reference_points()) {
      const CycleConfig cfg = at(p.alpha, p.half_width);
      const std::string where = label(p.alpha, p.half_width * 1e9);
      const auto ctx = ThermalContext::from_temperature(p.temperature, cfg.boltzmann);
      for (bool divided : {false, true}) {
        const auto state = canonical_state(cfg.well.with_divided(divided), ctx, cfg.series);
        const ReferenceCorner& ref = divided ? p.divided : p.undivided;
        log_z.observe(relative(state.partition.log_z, ref.log_z), where);
        energy.observe(relative(state.internal_energy, ref.internal_energy), where);
      }
      const CycleResult r = run_cycle(cfg);
      const ReferenceCycle& c = p.cycle;
      log_z.observe(relative(r.log_z_a, c.log_z_a), where);
      log_z.observe(relative(r.log_z_b, c.log_z_b), where);
      log_z.observe(relative(r.log_z_c, c.log_z_c), where);
      log_z.observe(relative(r.log_z_d, c.log_z_d), where);
      energy.observe(relative(r.u_a, c.u_a), where);
      energy.observe(relative(r.u_b, c.u_b), where);
      energy.observe(relative(r.u_c, c.u_c), where);
      energy.observe(relative(r.u_d, c.u_d), where);
      work.observe(relative(r.work, c.work), where);
      if (r.efficiency.has_value() != c.efficiency_defined) {
        eta.observe(std::numeric_limits<double>::infinity(), where + " (definedness)");
      } else if (c.efficiency_defined) {
        eta.observe(relative(*r.efficiency, c.efficiency), where);
      }
    }
    report.checks.push_back(log_z.result("oracle ln Z (rel)"));
    report.checks.push_back(energy.result("oracle U (rel)"));
    report.checks.push_back(work.result("oracle W (rel)"));
    report.checks.push_back(eta.result("oracle eta (rel)"));
  }

  void sweep_checks(ValidationReport& report) const {
    SweepConfig cfg = default_sweep_config();
    cfg.base = base_;
    const auto records = run_sweep(cfg, options_.execution);

    Worst first_law{1e-10};
    Worst carnot{0.0};
    int truncated = 0;
    const double carnot_limit = 1.0 - cfg.base.cold_temperature / cfg.base.hot_temperature + 1e-9;
    const double kth = cfg.base.boltzmann * cfg.base.hot_temperature;
    for (const SweepRecord& r : records) {
      if (r.status == SweepStatus::TruncationFailed) {
        ++truncated;
        continue;
      }
      const double residual = r.work - (r.q_ab + r.q_bc + r.q_cd + r.q_da);
      first_law.observe(std::fabs(residual) / std::max(std::fabs(r.work), kth),
                        label(r.alpha, r.a_nm));
      if (r.efficiency) {
        carnot.observe(std::max(0.0, *r.efficiency - carnot_limit), label(r.alpha, r.a_nm));
      }
    }
    report.checks.push_back(first_law.result("first law, default grid (rel)"));
    report.checks.push_back(carnot.result("carnot bound, default grid (excess)"));
    report.checks.push_back({"truncation, default grid (failed points)", truncated == 0,
                             static_cast<double>(truncated), 0.0,
                             std::to_string(truncated) + " of " + std::to_string(records.size()) +
                                 " points hit the term cap"});
    report.checks.push_back(persistence(records, cfg));
  }

  // With a* the half-width of the largest W at alpha = 2 (ties resolved
  // towards larger a), alpha = 1.5 must beat alpha = 2 on [2a*, 5a*].
  CheckResult persistence(const std::vector<SweepRecord>& records, const SweepConfig& cfg) const {
    std::vector<const SweepRecord*> full, fractional;
    for (const SweepRecord& r : records) {
      if (r.alpha == 2.0) {
        full.push_back(&r);
      } else if (r.alpha == 1.5) {
        fractional.push_back(&r);
      }
    }
    if (full.empty() || fractional.size() != full.size()) {
      return {"fractional persistence", false, 0.0, 0.0, "default grid lacks alpha 2 or 1.5"};
    }
    std::size_t peak = 0;
    for (std::size_t i = 0; i < full.size(); ++i) {
      if (full[i]->work >= full[peak]->work) {
        peak = i;
      }
    }
    const double a_star = full[peak]->a_nm;
    int violations = 0;
    int compared = 0;
    for (std::size_t i = 0; i < full.size(); ++i) {
      if (full[i]->a_nm < 2 * a_star || full[i]->a_nm > 5 * a_star) {
        continue;
      }
      ++compared;
      if (!(fractional[i]->work > full[i]->work)) {
        ++violations;
      }
      if (full[i]->efficiency && !(fractional[i]->efficiency && *fractional[i]->efficiency > *full[i]->efficiency)) {
        ++violations;
      }
    }
    (void)cfg;
    std::ostringstream detail;
    detail << "a*=" << a_star << "nm, " << compared << " grid points compared";
    return {"fractional persistence (violations)", violations == 0 && compared > 0,
            static_cast<double>(violations), 0.0, detail.str()};
  }

  CheckResult zero_gradient() const {
    Worst worst{1e-12};
    for (double alpha : {2.0, 1.5, 1.2}) {
      for (double a_nm : {1.0, 10.0, 50.0}) {
        CycleConfig cfg = at(alpha, a_nm * 1e-9);
        cfg.cold_temperature = cfg.hot_temperature;
        const CycleResult r = run_cycle(cfg);
        const double kt = cfg.hot().thermal_energy();
        for (double v : {r.work, r.q_bc, r.q_da}) {
          worst.observe(std::fabs(v) / kt, label(alpha, a_nm));
        }
      }
    }
    return worst.result("zero-gradient cycle (|x|/kT)");
  }

  CheckResult derivative_consistency() const {
    Worst worst{1e-5};
    std::mt19937_64 rng(30);
    for (int i = 0; i < 30; ++i) {
      WellSpec spec = base_.well;
      spec.alpha = 0.6 + 1.4 * unit(rng);
      spec.half_width = 1e-9 * std::exp(std::log(0.5) + std::log(100.0) * unit(rng));
      spec.divided = (rng() & 1U) != 0;
      const double temperature = (rng() & 1U) ? 2.0 : 1.0;
      const auto ctx = ThermalContext::from_temperature(temperature, base_.boltzmann);
      const double beta = ctx.inverse_temperature();
      const double delta = 1e-6 * beta;
      const auto up = ThermalContext::from_inverse_temperature(beta + delta, base_.boltzmann);
      const auto down = ThermalContext::from_inverse_temperature(beta - delta, base_.boltzmann);
      const double fd = -(log_partition(spec, up, base_.series).log_z -
                          log_partition(spec, down, base_.series).log_z) /
                        (2 * delta);
      worst.observe(relative(fd, internal_energy(spec, ctx, base_.series)),
                    label(spec.alpha, spec.half_width * 1e9));
    }
    return worst.result("derivative consistency (rel)");
  }

  CheckResult degeneracy_factor() const {
    Worst worst{1e-13};
    for (double alpha : {2.0, 1.8, 1.5, 1.2, 0.8}) {
      for (double a_nm : {0.5, 5.0, 50.0}) {
        const WellSpec open = at(alpha, a_nm * 1e-9).well;
        const auto ctx = ThermalContext::from_temperature(2.0, base_.boltzmann);
        const double lhs =
            log_partition(open.with_divided(true), ctx, base_.series).log_z - std::numbers::ln2;
        // log-sum-exp over even undivided levels, shifted by level 2
        const double shift = ctx.inverse_temperature() * energy_level(open, 2).energy;
        CompensatedSum rest;
        for (std::int64_t n = 4;; n += 2) {
          const double w = std::exp(shift - ctx.inverse_temperature() * energy_level(open, n).energy);
          if (w < 1e-18 * (1.0 + rest.value())) {
            break;
          }
          rest += w;
        }
        worst.observe(relative(lhs, -shift + std::log1p(rest.value())), label(alpha, a_nm));
      }
    }
    return worst.result("degeneracy factor (rel)");
  }

  CheckResult truncation_stability() const {
    Worst worst{2 * base_.series.tolerance};
    for (double alpha : {2.0, 1.5, 1.0}) {
      for (double a_nm : {0.5, 20.0, 200.0}) {
        const WellSpec spec = at(alpha, a_nm * 1e-9).well;
        const auto ctx = ThermalContext::from_temperature(2.0, base_.boltzmann);
        const auto once = log_partition(spec, ctx, base_.series);
        const auto twice = canonical_state_fixed_terms(spec, ctx, 2 * once.terms_used).partition;
        worst.observe(std::fabs(twice.log_shifted_sum - once.log_shifted_sum), label(alpha, a_nm));
      }
    }
    return worst.result("truncation stability (|d ln Z|)");
  }

  CheckResult szilard_limit() const {
    Worst worst{1e-4};
    for (double alpha : {2.0, 1.8, 1.5, 1.2}) {
      CycleConfig cfg = at(alpha, 1e-9);
      const auto cold = cfg.cold();
      for (double theta : {100.0, 400.0}) {
        cfg.well.half_width = half_width_for_reduced_gap(cfg.well.with_divided(false),
                                                         cold.inverse_temperature(), theta);
        const CycleResult r = run_cycle(cfg);
        const double limit =
            cfg.boltzmann * (cfg.hot_temperature - cfg.cold_temperature) * std::numbers::ln2;
        worst.observe(relative(r.work, limit), label(alpha, cfg.well.half_width * 1e9));
      }
    }
    return worst.result("szilard limit (rel)");
  }

  CheckResult classical_limit() const {
    Worst worst{0.02};
    for (double a_nm : {500.0, 1000.0, 2000.0}) {
      const CycleConfig cfg = at(2.0, a_nm * 1e-9);
      const CycleResult r = run_cycle(cfg);
      worst.observe(std::fabs(r.work) / cfg.hot().thermal_energy(), label(2.0, a_nm));
    }
    return worst.result("classical limit, alpha=2 (|W|/kT_h)");
  }

  ValidationOptions options_;
  CycleConfig base_;
};

} // namespace

ValidationReport validate(const ValidationOptions& options) { return Validator(options).run(); }

void print_report(std::ostream& os, const ValidationReport& report) {
  for (const CheckResult& c : report.checks) {
    os << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(44) << c.name
       << " worst=" << std::setprecision(3) << std::scientific << c.worst << " limit=" << c.limit
       << std::defaultfloat;
    if (!c.detail.empty()) {
      os << "  (" << c.detail << ")";
    }
    os << '\n';
  }
  os << (report.all_passed() ? "all checks passed" : "validation FAILED") << '\n';
}

} // namespace fqhe
