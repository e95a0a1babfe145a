// Command-line front end for the fractional quantum Szilard engine.
//
// Exit status: 0 success, 1 validation or numerical failure, 2 bad
// arguments or configuration.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fqhe/csv.hpp"
#include "fqhe/cycle.hpp"
#include "fqhe/sweep.hpp"
#include "fqhe/thermo.hpp"
#include "fqhe/validate.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct ParticleOptions {
  double mass = fqhe::constants::electron_mass;
  double chi = 0.5;
  double alpha = 2.0;
  double a_nm = 0.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "fractional exponent, 0 < alpha <= 2")->capture_default_str();
    cmd->add_option("--a-nm", a_nm, "half-width of the well in nm")->required();
    cmd->add_option("--mass-kg", mass, "particle mass in kg")->capture_default_str();
    cmd->add_option("--chi", chi, "kinetic coefficient parameter")->capture_default_str();
  }

  [[nodiscard]] fqhe::WellSpec spec() const {
    fqhe::WellSpec s;
    s.mass = mass;
    s.chi = chi;
    s.alpha = alpha;
    s.half_width = a_nm * 1e-9;
    s.validate();
    return s;
  }
};

struct SeriesOptions {
  fqhe::SeriesControl control;

  void attach(CLI::App* cmd) {
    cmd->add_option("--tolerance", control.tolerance, "relative truncation tolerance")
        ->capture_default_str();
    cmd->add_option("--max-terms", control.max_terms, "term cap per partition sum")
        ->capture_default_str();
  }
};

int run_spectrum(const ParticleOptions& particle, std::int64_t n_max, bool divided) {
  const fqhe::WellSpec spec = particle.spec().with_divided(divided);
  std::cout << "n,energy_J,degeneracy\n";
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const fqhe::EnergyLevel level = fqhe::energy_level(spec, n);
    std::cout << n << ',' << fmt17(level.energy) << ',' << level.degeneracy << '\n';
  }
  return 0;
}

int run_partition(const ParticleOptions& particle, const SeriesOptions& series,
                  double temperature, bool divided) {
  const fqhe::WellSpec spec = particle.spec().with_divided(divided);
  const auto ctx = fqhe::ThermalContext::from_temperature(temperature);
  const fqhe::CanonicalState s = fqhe::canonical_state(spec, ctx, series.control);
  const auto& p = s.partition;
  std::cout << "log_z: " << fmt17(p.log_z) << '\n'
            << "terms_used: " << p.terms_used << '\n'
            << "tail_bound: " << fmt17(p.tail_bound) << '\n'
            << "reduced_gap: " << fmt17(p.reduced_gap) << '\n'
            << "ground_energy_J: " << fmt17(p.ground_energy) << '\n'
            << "internal_energy_J: " << fmt17(s.internal_energy) << '\n'
            << "free_energy_J: " << fmt17(-ctx.thermal_energy() * p.log_z) << '\n';
  return 0;
}

int run_cycle(const ParticleOptions& particle, const SeriesOptions& series, double t_hot,
              double t_cold) {
  fqhe::CycleConfig cfg;
  cfg.well = particle.spec();
  cfg.hot_temperature = t_hot;
  cfg.cold_temperature = t_cold;
  cfg.series = series.control;
  const fqhe::CycleResult r = fqhe::run_cycle(cfg);
  std::cout << "q_ab_J: " << fmt17(r.q_ab) << '\n'
            << "q_bc_J: " << fmt17(r.q_bc) << '\n'
            << "q_cd_J: " << fmt17(r.q_cd) << '\n'
            << "q_da_J: " << fmt17(r.q_da) << '\n'
            << "u_a_J: " << fmt17(r.u_a) << '\n'
            << "u_b_J: " << fmt17(r.u_b) << '\n'
            << "u_c_J: " << fmt17(r.u_c) << '\n'
            << "u_d_J: " << fmt17(r.u_d) << '\n'
            << "log_z_a: " << fmt17(r.log_z_a) << '\n'
            << "log_z_b: " << fmt17(r.log_z_b) << '\n'
            << "log_z_c: " << fmt17(r.log_z_c) << '\n'
            << "log_z_d: " << fmt17(r.log_z_d) << '\n'
            << "work_J: " << fmt17(r.work) << '\n'
            << "efficiency: " << (r.efficiency ? fmt17(*r.efficiency) : "undefined") << '\n'
            << "first_law_residual_J: " << fmt17(r.first_law_residual) << '\n';
  return 0;
}

int run_sweep(const std::string& config_path, const std::string& out_path, bool serial) {
  fqhe::SweepConfig cfg = fqhe::load_config(config_path);
  if (!out_path.empty()) {
    cfg.output_path = out_path;
  }
  const auto records =
      fqhe::run_sweep(cfg, serial ? fqhe::Execution::Serial : fqhe::Execution::Parallel);
  fqhe::write_csv(records, cfg.output_path);
  std::size_t failed = 0;
  for (const auto& r : records) {
    failed += r.status == fqhe::SweepStatus::TruncationFailed ||
              r.status == fqhe::SweepStatus::FirstLawFailed;
  }
  std::cerr << "wrote " << records.size() << " records to " << cfg.output_path;
  if (failed > 0) {
    std::cerr << " (" << failed << " failed points)";
  }
  std::cerr << '\n';
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional quantum Szilard engine: spectra, partition functions, cycles, sweeps"};
  app.require_subcommand(1);

  ParticleOptions particle;
  SeriesOptions series;

  auto* spectrum = app.add_subcommand("spectrum", "energy levels of the well");
  std::int64_t n_max = 10;
  bool divided = false;
  particle.attach(spectrum);
  spectrum->add_option("--n-max", n_max, "highest quantum number")->capture_default_str()
      ->check(CLI::PositiveNumber);
  spectrum->add_flag("--divided", divided, "barrier-divided box");

  auto* partition = app.add_subcommand("partition", "ln Z and U for one box");
  double temperature = 0.0;
  particle.attach(partition);
  series.attach(partition);
  partition->add_option("--temp-k", temperature, "bath temperature in K")->required();
  partition->add_flag("--divided", divided, "barrier-divided box");

  auto* cycle = app.add_subcommand("cycle", "heats, work and efficiency of one cycle");
  double t_hot = 2.0;
  double t_cold = 1.0;
  particle.attach(cycle);
  series.attach(cycle);
  cycle->add_option("--th-k", t_hot, "hot bath temperature in K")->capture_default_str();
  cycle->add_option("--tc-k", t_cold, "cold bath temperature in K")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "grid over (a, alpha), written as CSV");
  std::string config_path;
  std::string out_path;
  bool serial = false;
  sweep->add_option("--config", config_path, "JSON sweep configuration")->required();
  sweep->add_option("--out", out_path, "CSV output path (overrides output_path)");
  sweep->add_flag("--serial", serial, "evaluate grid points on one thread");

  auto* check = app.add_subcommand("validate", "oracle and invariant checks");
  fqhe::ValidationOptions vopts;
  check->add_option("--kb-scale", vopts.boltzmann_scale, "multiply k_B (diagnostic)");
  check->add_option("--max-terms", vopts.max_terms, "term cap per partition sum");
  check->add_flag("--serial", serial, "evaluate grid points on one thread");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*spectrum) {
      return run_spectrum(particle, n_max, divided);
    }
    if (*partition) {
      return run_partition(particle, series, temperature, divided);
    }
    if (*cycle) {
      return run_cycle(particle, series, t_hot, t_cold);
    }
    if (*sweep) {
      return run_sweep(config_path, out_path, serial);
    }
    if (*check) {
      vopts.execution = serial ? fqhe::Execution::Serial : fqhe::Execution::Parallel;
      const fqhe::ValidationReport report = fqhe::validate(vopts);
      fqhe::print_report(std::cout, report);
      return report.all_passed() ? 0 : kExitFailure;
    }
  } catch (const fqhe::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitConfig;
  } catch (const fqhe::TruncationError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
