#pragma once

#include <map>
#include <string_view>

#include "chargent/models.hpp"

namespace chargent {

/// Gibbs distribution p_m(beta) = a_m e^{-beta m} / Z over the local weights
/// (multiplicities of equal weights are summed).
struct ChargeDistribution {
  double beta = 0.0;
  std::map<DoubledCharge, double> probabilities;

  double mean() const;
  double variance() const;
};

/// Local thermodynamics at one charge density s.
struct ThermoPoint {
  double s = 0.0;
  double beta_star = 0.0;  // eta'(s)
  double eta = 0.0;        // local entropy
  double eta_pp = 0.0;     // eta''(s) = -1 / Var(m) < 0
  double c_star = 0.0;     // beta*^2 / (-eta'')
  double alpha0 = 1.0;     // 1 (U1) or 1 - e^{beta*} (SU2)
};

ChargeDistribution gibbs(const ChargeModel& model, double beta);

/// log sum_m a_m e^{-beta m}, max-shifted.
double log_partition(const ChargeModel& model, double beta);

/// Open interval of admissible densities: (min weight, max weight) for U1,
/// (0, max weight) for SU2.
struct DensityInterval {
  double lo = 0.0;
  double hi = 0.0;
};
DensityInterval density_interval(const ChargeModel& model);

/// Inverse temperature at which the Gibbs mean equals s. Bisection on the
/// monotone mean-charge curve. Throws DomainError when s is within 1e-9 of
/// (or beyond) the extreme weights, ModelError when the weight support is a
/// single point.
double solve_beta_star(const ChargeModel& model, double s);

/// log k minus the relative entropy of p(beta) with respect to p(0).
double eta_relative_entropy(const ChargeModel& model, double beta);

/// log Z(beta) + beta s, the Legendre form.
double eta_legendre(const ChargeModel& model, double beta, double s);

ThermoPoint thermo_point(const ChargeModel& model, double s);

/// Mean weight at beta = 0, sum m a_m / k.
double infinite_temperature_density(const ChargeModel& model);

/// SU(2) infinite temperature sits at s = 0, the extremal point excluded
/// from the asymptotic formulas.
bool infinite_temperature_is_extremal(const ChargeModel& model);

/// Closed-form thermodynamics of the six catalog models, evaluated without
/// any root solve.
ThermoPoint catalog_closed_forms(std::string_view name, double s);

}  // namespace chargent
