#include "mp_oracle.hpp"

#include <mpfr.h>

#include <boost/math/constants/constants.hpp>

namespace fqhe_oracle {

namespace {
const Real kHorizon = 250;

Real pi() { return boost::math::constants::pi<Real>(); }
}

void init() {
  mpfr_set_emin(mpfr_get_emin_min());
  mpfr_set_emax(mpfr_get_emax_max());
}

Real planck() { return Real("6.62607015e-34"); }
Real reduced_planck() { return planck() / (2 * pi()); }
Real boltzmann() { return Real("1.380649e-23"); }
Real speed_of_light() { return Real(299792458); }

Real d_alpha(const Particle& p, double alpha) {
  const Real m(p.mass);
  const Real c = speed_of_light();
  return Real(p.chi) * m * c * c / pow(m * c, Real(alpha));
}

Real level_energy(const Particle& p, double alpha, double half_width, bool divided, long n) {
  const Real k = divided ? 2 : 1;
  const Real momentum = k * n * pi() * reduced_planck() /
                        (2 * Real(half_width));
  return d_alpha(p, alpha) * pow(momentum, Real(alpha));
}

CornerValue corner(const Particle& p, double alpha, double half_width, double temperature,
                   bool divided, long terms) {
  const Real beta = 1 / (boltzmann() * Real(temperature));
  const Real g = divided ? 2 : 1;
  const Real d = d_alpha(p, alpha);
  const Real k = divided ? 2 : 1;
  const Real unit = k * pi() * reduced_planck() /
                    (2 * Real(half_width));

  Real z = 0;
  Real moment = 0;
  Real first_exponent = 0;
  long n = 1;
  for (; n <= terms; ++n) {
    const Real energy = d * pow(unit * n, Real(alpha));
    const Real exponent = beta * energy;
    if (n == 1) {
      first_exponent = exponent;
    } else if (exponent - first_exponent > kHorizon) {
      break;
    }
    const Real weight = g * exp(-exponent);
    z += weight;
    moment += energy * weight;
  }
  return {log(z), moment / z, terms};
}

CycleValue cycle(const Particle& p, double alpha, double half_width, double t_hot, double t_cold,
                 long terms) {
  const CornerValue a = corner(p, alpha, half_width, t_hot, false, terms);
  const CornerValue b = corner(p, alpha, half_width, t_hot, true, terms);
  const CornerValue c = corner(p, alpha, half_width, t_cold, true, terms);
  const CornerValue d = corner(p, alpha, half_width, t_cold, false, terms);
  const Real kth = boltzmann() * Real(t_hot);
  const Real ktc = boltzmann() * Real(t_cold);

  CycleValue v;
  v.log_z_a = a.log_z;
  v.log_z_b = b.log_z;
  v.log_z_c = c.log_z;
  v.log_z_d = d.log_z;
  v.u_a = a.internal_energy;
  v.u_b = b.internal_energy;
  v.u_c = c.internal_energy;
  v.u_d = d.internal_energy;
  v.q_ab = b.internal_energy - a.internal_energy + kth * (b.log_z - a.log_z);
  v.q_cd = d.internal_energy - c.internal_energy + ktc * (d.log_z - c.log_z);
  v.q_bc = c.internal_energy - b.internal_energy;
  v.q_da = a.internal_energy - d.internal_energy;
  v.work = kth * (b.log_z - a.log_z) - ktc * (c.log_z - d.log_z);
  const Real heat_in = v.q_da + v.q_ab;
  v.efficiency_defined = v.work > 0 && heat_in > 0;
  v.efficiency = v.efficiency_defined ? 1 + (v.q_bc + v.q_cd) / heat_in : Real(0);
  return v;
}

Real tail_sum(double theta, double alpha, long n_cut, long terms) {
  const Real t(theta);
  const Real a(alpha);
  Real sum = 0;
  Real first = 0;
  for (long n = n_cut + 1; n <= n_cut + terms; ++n) {
    const Real exponent = t * pow(Real(n), a);
    if (n == n_cut + 1) {
      first = exponent;
    } else if (exponent - first > kHorizon) {
      break;
    }
    sum += exp(-exponent);
  }
  return sum;
}

} // namespace fqhe_oracle
