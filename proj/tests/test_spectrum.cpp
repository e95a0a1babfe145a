#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fqhe/reference_data.hpp"
#include "fqhe/spectrum.hpp"

using namespace fqhe;

namespace {

double rel(double value, double reference) {
  return std::fabs(value - reference) / std::fabs(reference);
}

WellSpec electron(double alpha, double half_width, bool divided = false) {
  WellSpec s;
  s.mass = 9.11e-31;
  s.alpha = alpha;
  s.chi = 0.5;
  s.half_width = half_width;
  s.divided = divided;
  return s;
}

// n^2 pi^2 hbar^2 / (8 m a^2)
double textbook_level(double mass, double half_width, double n) {
  const double hbar = constants::reduced_planck;
  return n * n * std::numbers::pi * std::numbers::pi * hbar * hbar /
         (8.0 * mass * half_width * half_width);
}

} // namespace

TEST_CASE("d_alpha") {
  SUBCASE("alpha = 2, chi = 1/2 is exactly 1/(2m)") {
    CHECK(d_alpha(electron(2.0, 1e-9)) == 1.0 / (2.0 * 9.11e-31));
    WellSpec unit = electron(2.0, 1e-9);
    unit.mass = 1.0;
    CHECK(d_alpha(unit) == 0.5);
  }
  SUBCASE("alpha = 1.5 against the MPFR oracle") {
    CHECK(rel(d_alpha(electron(1.5, 1e-9)), reference_spot_values().d_alpha_1_5) < 1e-14);
  }
}

TEST_CASE("energy_level") {
  SUBCASE("alpha = 2 ground level against the MPFR oracle") {
    const double e1 = energy_level(electron(2.0, 1e-9), 1).energy;
    CHECK(rel(e1, reference_spot_values().ground_energy_1nm) < 1e-14);
  }
  SUBCASE("alpha = 2 reduces to the textbook infinite well") {
    for (double a : {0.5e-9, 1e-9, 2e-8, 3.3e-7}) {
      for (std::int64_t n : {1, 2, 7, 1000}) {
        const double e = energy_level(electron(2.0, a), n).energy;
        CHECK(rel(e, textbook_level(9.11e-31, a, static_cast<double>(n))) <= 1e-14);
      }
    }
  }
  SUBCASE("divided level n is undivided level 2n, bit for bit") {
    for (double alpha : {0.3, 1.0, 1.5, 1.99, 2.0}) {
      for (std::int64_t n : {1, 2, 5, 123}) {
        const EnergyLevel div = energy_level(electron(alpha, 7e-9, true), n);
        const EnergyLevel und = energy_level(electron(alpha, 7e-9, false), 2 * n);
        CHECK(div.energy == und.energy);
        CHECK(div.degeneracy == 2);
        CHECK(div.n == n);
        CHECK(und.degeneracy == 1);
      }
    }
  }
  SUBCASE("rejects n < 1") {
    CHECK_THROWS_AS((void)energy_level(electron(2.0, 1e-9), 0), std::invalid_argument);
    CHECK_THROWS_AS((void)energy_level(electron(2.0, 1e-9), -3), std::invalid_argument);
  }
  SUBCASE("rejects invalid specs") {
    CHECK_THROWS_AS((void)energy_level(electron(2.5, 1e-9), 1), std::invalid_argument);
    CHECK_THROWS_AS((void)energy_level(electron(0.0, 1e-9), 1), std::invalid_argument);
    CHECK_THROWS_AS((void)energy_level(electron(1.0, -1e-9), 1), std::invalid_argument);
    WellSpec bad = electron(1.0, 1e-9);
    bad.chi = 0.0;
    CHECK_THROWS_AS((void)energy_level(bad, 1), std::invalid_argument);
    bad = electron(1.0, 1e-9);
    bad.mass = 0.0;
    CHECK_THROWS_AS((void)energy_level(bad, 1), std::invalid_argument);
  }
}

TEST_CASE("spectrum properties over random specs") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> alpha_dist(0.05, 2.0);
  std::uniform_real_distribution<double> log_a(std::log(1e-10), std::log(1e-6));
  for (int i = 0; i < 200; ++i) {
    const double alpha = alpha_dist(rng);
    const double a = std::exp(log_a(rng));
    const WellSpec spec = electron(alpha, a);

    // strictly increasing and positive
    double previous = 0.0;
    for (std::int64_t n = 1; n <= 50; ++n) {
      const double e = energy_level(spec, n).energy;
      REQUIRE(e > previous);
      previous = e;
    }

    // doubling the width divides energies by 2^alpha
    WellSpec wide = spec;
    wide.half_width = 2 * a;
    for (std::int64_t n : {1, 3, 40}) {
      const double expected = energy_level(spec, n).energy / std::pow(2.0, alpha);
      CHECK(rel(energy_level(wide, n).energy, expected) <= 1e-14);
    }
  }
}

TEST_CASE("continuity in alpha at 2") {
  for (double a : {0.5e-9, 2e-8, 2e-7}) {
    for (std::int64_t n : {1, 10}) {
      const double at_two = energy_level(electron(2.0, a), n).energy;
      const double near = energy_level(electron(2.0 - 1e-6, a), n).energy;
      CHECK(rel(near, at_two) < 1e-4);
    }
  }
}

TEST_CASE("reduced_gap") {
  const double beta = 1.0 / (constants::boltzmann * 1.0);
  SUBCASE("theta_1 at 1 nm, 1 K against the oracle, order 1e3") {
    const double theta = ground_reduced_gap(electron(2.0, 1e-9), beta);
    CHECK(rel(theta, reference_spot_values().reduced_gap_1nm_1k) < 1e-14);
    CHECK(theta > 1e3);
    CHECK(theta < 1e4);
  }
  SUBCASE("n^alpha scaling at theta_1 = 1") {
    WellSpec spec = electron(2.0, 1e-9);
    spec.half_width = half_width_for_reduced_gap(spec, beta, 1.0);
    CHECK(ground_reduced_gap(spec, beta) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(reduced_gap(spec, beta, 3) == doctest::Approx(9.0).epsilon(1e-14));
  }
  SUBCASE("consistent with beta E_n and positive") {
    for (double alpha : {0.4, 1.3, 2.0}) {
      for (bool divided : {false, true}) {
        const WellSpec spec = electron(alpha, 5e-9, divided);
        CHECK(ground_reduced_gap(spec, beta) > 0.0);
        for (std::int64_t n : {1, 4, 17}) {
          CHECK(rel(reduced_gap(spec, beta, n), beta * energy_level(spec, n).energy) < 1e-14);
        }
      }
    }
  }
  SUBCASE("half_width_for_reduced_gap inverts the gap, divided boxes included") {
    for (double alpha : {0.7, 1.5, 2.0}) {
      for (bool divided : {false, true}) {
        WellSpec spec = electron(alpha, 1e-9, divided);
        spec.half_width = half_width_for_reduced_gap(spec, beta, 100.0);
        CHECK(ground_reduced_gap(spec, beta) == doctest::Approx(100.0).epsilon(1e-13));
      }
    }
  }
  SUBCASE("rejects non-positive beta") {
    CHECK_THROWS_AS((void)reduced_gap(electron(2.0, 1e-9), 0.0, 1), std::invalid_argument);
  }
}
