#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fqhe/config.hpp"

namespace fqhe {

enum class SweepStatus { Ok, TruncationFailed, EtaUndefined, FirstLawFailed };

[[nodiscard]] std::string_view to_string(SweepStatus status);
[[nodiscard]] std::optional<SweepStatus> parse_status(std::string_view text);

/// One (alpha, a) grid point. Numeric fields are NaN when the point's
/// partition sums did not converge.
struct SweepRecord {
  double alpha = 0.0;
  double a_nm = 0.0;
  double work = 0.0; // J
  std::optional<double> efficiency;
  double q_ab = 0.0, q_bc = 0.0, q_cd = 0.0, q_da = 0.0;
  double log_z_a = 0.0, log_z_b = 0.0, log_z_c = 0.0, log_z_d = 0.0;
  std::int64_t terms_used_max = 0;
  double tail_bound_max = 0.0;
  SweepStatus status = SweepStatus::Ok;
};

enum class Execution { Serial, Parallel };

/// The per-point kernel: one full cycle at (alpha, a_nm) on top of `base`.
/// Failures are recorded in the status field, never thrown.
[[nodiscard]] SweepRecord evaluate_point(const CycleConfig& base, double alpha, double a_nm);

/// Reference implementation: a plain loop in output order.
[[nodiscard]] std::vector<SweepRecord> run_sweep_serial(const SweepConfig& cfg);

/// OpenMP fan-out over the flattened grid. Each thread writes only its own
/// slots, so the result is identical to run_sweep_serial.
[[nodiscard]] std::vector<SweepRecord> run_sweep_parallel(const SweepConfig& cfg);

/// Records in alpha-major order (alpha_grid order), ascending a within each
/// alpha. Row count is always |a_grid| * |alpha_grid|.
[[nodiscard]] std::vector<SweepRecord> run_sweep(const SweepConfig& cfg,
                                                 Execution execution = Execution::Parallel);

} // namespace fqhe
