#include "fqhe/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fqhe {

std::string_view to_string(SweepStatus status) {
  switch (status) {
  case SweepStatus::Ok:
    return "ok";
  case SweepStatus::TruncationFailed:
    return "truncation-failed";
  case SweepStatus::EtaUndefined:
    return "eta-undefined";
  case SweepStatus::FirstLawFailed:
    return "first-law-failed";
  }
  return "unknown";
}

std::optional<SweepStatus> parse_status(std::string_view text) {
  for (SweepStatus s : {SweepStatus::Ok, SweepStatus::TruncationFailed, SweepStatus::EtaUndefined,
                        SweepStatus::FirstLawFailed}) {
    if (to_string(s) == text) {
      return s;
    }
  }
  return std::nullopt;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

SweepRecord from_cycle(double alpha, double a_nm, const CycleResult& r, SweepStatus status) {
  SweepRecord rec;
  rec.alpha = alpha;
  rec.a_nm = a_nm;
  rec.work = r.work;
  rec.efficiency = r.efficiency;
  rec.q_ab = r.q_ab;
  rec.q_bc = r.q_bc;
  rec.q_cd = r.q_cd;
  rec.q_da = r.q_da;
  rec.log_z_a = r.log_z_a;
  rec.log_z_b = r.log_z_b;
  rec.log_z_c = r.log_z_c;
  rec.log_z_d = r.log_z_d;
  rec.terms_used_max = r.terms_used_max;
  rec.tail_bound_max = r.tail_bound_max;
  rec.status = status;
  return rec;
}

std::vector<double> sorted_a(const SweepConfig& cfg) {
  std::vector<double> a = cfg.a_grid_nm;
  std::stable_sort(a.begin(), a.end());
  return a;
}

} // namespace

SweepRecord evaluate_point(const CycleConfig& base, double alpha, double a_nm) {
  CycleConfig cfg = base;
  cfg.well.alpha = alpha;
  cfg.well.half_width = a_nm * 1e-9;
  try {
    const CycleResult r = run_cycle(cfg);
    return from_cycle(alpha, a_nm, r,
                      r.efficiency ? SweepStatus::Ok : SweepStatus::EtaUndefined);
  } catch (const FirstLawViolation& e) {
    return from_cycle(alpha, a_nm, e.result(), SweepStatus::FirstLawFailed);
  } catch (const TruncationError& e) {
    SweepRecord rec;
    rec.alpha = alpha;
    rec.a_nm = a_nm;
    rec.work = rec.q_ab = rec.q_bc = rec.q_cd = rec.q_da = kNaN;
    rec.log_z_a = rec.log_z_b = rec.log_z_c = rec.log_z_d = kNaN;
    rec.terms_used_max = e.partial().partition.terms_used;
    rec.tail_bound_max = e.partial().partition.tail_bound;
    rec.status = SweepStatus::TruncationFailed;
    return rec;
  }
}

std::vector<SweepRecord> run_sweep_serial(const SweepConfig& cfg) {
  cfg.validate();
  const std::vector<double> a = sorted_a(cfg);
  std::vector<SweepRecord> out;
  out.reserve(a.size() * cfg.alpha_grid.size());
  for (double alpha : cfg.alpha_grid) {
    for (double a_nm : a) {
      out.push_back(evaluate_point(cfg.base, alpha, a_nm));
    }
  }
  return out;
}

std::vector<SweepRecord> run_sweep_parallel(const SweepConfig& cfg) {
  cfg.validate();
  const std::vector<double> a = sorted_a(cfg);
  const auto n_a = static_cast<std::int64_t>(a.size());
  const auto total = n_a * static_cast<std::int64_t>(cfg.alpha_grid.size());
  std::vector<SweepRecord> out(static_cast<std::size_t>(total));

  // Cost per point varies by orders of magnitude (term counts grow with a
  // and shrink with alpha), hence the dynamic schedule.
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < total; ++i) {
    out[i] = evaluate_point(cfg.base, cfg.alpha_grid[i / n_a], a[i % n_a]);
  }
  return out;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg, Execution execution) {
  return execution == Execution::Serial ? run_sweep_serial(cfg) : run_sweep_parallel(cfg);
}

} // namespace fqhe
