#pragma once

#include <utility>
#include <vector>

#include "chargent/models.hpp"
#include "chargent/sectors.hpp"
#include "chargent/thermo.hpp"

namespace chargent {

/// |beta*| below this counts as the infinite-temperature point s = s_inf.
inline constexpr double kDeltaTolerance = 1e-9;

enum class Regime { f_below_half, f_half, f_above_half };

std::string_view to_string(Regime r);

/// Exact comparison of f with 1/2.
Regime regime_of(Fraction f);

/// Asymptotic <S_A> = term_N * N + term_sqrtN * sqrt(N) + term_O1 + o(1).
struct EntropyEstimate {
  Regime regime = Regime::f_below_half;
  double term_N = 0.0;
  double term_sqrtN = 0.0;
  double term_O1 = 0.0;
  bool includes_delta = false;
  ThermoPoint thermo;

  double total(double n) const;
};

/// log D at density s: log[alpha0 sqrt(-eta''/(2 pi n)) e^{n eta}], times the
/// charge-lattice spacing when the local weights are not spaced by 1.
/// SU2 requires s > 0.
double asymptotic_log_dim(const ChargeModel& model, double s, int n);

/// Charge-lattice spacing of U1 totals (or SU2 weights), in physical units.
double lattice_spacing(const ChargeModel& model);

/// alpha0'(s) / alpha0(s): 0 for U1, -e^{beta} eta'' / (1 - e^{beta}) for SU2.
double alpha0_log_derivative(GroupKind group, const ThermoPoint& tp);

/// N-scaled moments of t - s under rho_N(t):
///   mean of (t - s)   ~ mean_shift / N,
///   mean of (t - s)^2 ~ variance / N.
struct DensityMoments {
  double mean_shift = 0.0;
  double variance = 0.0;
};
DensityMoments charge_density_moments(const ChargeModel& model, double f, double s);

/// Exact finite-N distribution of the subsystem density t = q_A / N_A with
/// probabilities d b / D.
struct SubsystemChargeDistribution {
  int n_total = 0;
  int n_a = 0;
  DoubledCharge q_total;
  std::vector<std::pair<double, double>> support;  // (t, probability)

  double moment(double center, int power) const;
};
SubsystemChargeDistribution subsystem_charge_distribution(const BlockTable& blocks);

/// Throws DomainError for f in {0, 1}, for s outside the density interval
/// and for the SU2 extremal point s <= 0.
EntropyEstimate average_entropy_asymptotic(const ChargeModel& model, Fraction f, double s);

/// The three digamma-formula contributions, each as an asymptotic series
/// with an explicit log N coefficient (which cancels in the sum).
struct TermSeries {
  double term_N = 0.0;
  double term_sqrtN = 0.0;
  double term_logN = 0.0;
  double term_O1 = 0.0;
};
struct EntropyBreakdown {
  TermSeries y1;
  TermSeries y2;
  TermSeries y3;
};
EntropyBreakdown entropy_term_breakdown(const ChargeModel& model, Fraction f, double s);

/// Variance ~ exp(log_variance_prefactor_coeff) N^{3/2} e^{-N rate}.
/// Throws DomainError at the infinite-temperature point (beta* = 0).
struct VarianceAsymptotic {
  double log_variance_prefactor_coeff = 0.0;
  double rate = 0.0;

  double log_variance(double n) const;
};
VarianceAsymptotic variance_asymptotic(const ChargeModel& model, Fraction f, double s);

}  // namespace chargent
