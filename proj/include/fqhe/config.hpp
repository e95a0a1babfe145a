#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fqhe/cycle.hpp"

namespace fqhe {

/// A grid of cycles over half-width and fractional exponent.
///
/// Defaults: m = 9.11e-31 kg, chi = 1/2,
/// T_h = 2 K, T_c = 1 K, alpha in {2.0, 1.8, 1.5, 1.2}, and 200
/// log-spaced half-widths between 0.5 and 200 nm.
struct SweepConfig {
  CycleConfig base;
  std::vector<double> a_grid_nm;
  std::vector<double> alpha_grid;
  std::string output_path = "fqhe_sweep.csv";

  void validate() const;
};

/// Schema or range violation. `path()` names the offending field, e.g.
/// "/a_grid/count".
class ConfigError : public std::runtime_error {
public:
  ConfigError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

  [[nodiscard]] const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

[[nodiscard]] SweepConfig default_sweep_config();

[[nodiscard]] std::vector<double> linear_grid(double min, double max, int count);
[[nodiscard]] std::vector<double> log_grid(double min, double max, int count);

/// Parses a JSON sweep document. An empty or whitespace-only document
/// yields the defaults. Unknown keys are rejected.
///
/// Keys: mass_kg, chi, t_hot_k, t_cold_k, tolerance, max_terms,
/// a_grid {min_nm, max_nm, count, spacing: "linear" | "log"} or a_list_nm,
/// alpha_list, output_path.
[[nodiscard]] SweepConfig parse_config(std::string_view text);

[[nodiscard]] SweepConfig load_config(const std::filesystem::path& path);

} // namespace fqhe
