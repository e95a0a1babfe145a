#pragma once

#include <span>

namespace fqhe {

// Values frozen from the 80-digit MPFR oracle in tests/oracle, rounded to
// double. Regenerate with the `regenerate_reference` target.
//
// All entries use m = 9.11e-31 kg and chi = 1/2; cycles run between
// T_h = 2 K and T_c = 1 K.

struct ReferenceCorner {
  double log_z;
  double internal_energy; // J
};

struct ReferenceCycle {
  double log_z_a, log_z_b, log_z_c, log_z_d;
  double u_a, u_b, u_c, u_d;
  double q_ab, q_bc, q_cd, q_da;
  double work;
  bool efficiency_defined;
  double efficiency;
};

/// A pseudo-random point with alpha in [0.6, 2], a log-uniform in
/// [0.5, 50] nm and T in {1, 2} K.
struct ReferencePoint {
  double alpha;
  double half_width; // m
  double temperature; // K, for the two single-box entries
  ReferenceCorner undivided;
  ReferenceCorner divided;
  ReferenceCycle cycle;
};

struct ReferenceSpotValues {
  double d_alpha_1_5;             // alpha = 1.5
  double ground_energy_1nm;       // alpha = 2, a = 1 nm, undivided
  double reduced_gap_1nm_1k;      // alpha = 2, a = 1 nm, T = 1 K
  ReferenceCorner box_a_20nm_2k;  // alpha = 2, a = 20 nm, T = 2 K, undivided
  double free_energy_20nm_2k;     // -k_B T ln Z for the same box
  ReferenceCycle cycle_20nm;      // alpha = 2, a = 20 nm
  double tail_sum_theta_0_5_alpha_1_5_cut_10;
};

inline constexpr double kReferenceMass = 9.11e-31;
inline constexpr double kReferenceChi = 0.5;
inline constexpr double kReferenceHot = 2.0;
inline constexpr double kReferenceCold = 1.0;

[[nodiscard]] std::span<const ReferencePoint> reference_points();
[[nodiscard]] const ReferenceSpotValues& reference_spot_values();

} // namespace fqhe
