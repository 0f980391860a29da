#include "chargent/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "chargent/errors.hpp"

namespace chargent {

namespace {

constexpr double kPi = std::numbers::pi;

void require_open_fraction(double f) {
  if (!(f > 0.0 && f < 1.0)) throw DomainError("subsystem fraction must lie strictly inside (0, 1)");
}

void require_open_fraction(Fraction f) {
  if (f <= Fraction{0} || f >= Fraction{1})
    throw DomainError("subsystem fraction must lie strictly inside (0, 1)");
}

ThermoPoint checked_point(const ChargeModel& model, double s) {
  if (model.group() == GroupKind::SU2 && !(s > 0.0))
    throw DomainError("SU2 at s <= 0 is the extremal case; the stationary-point formula breaks down");
  return thermo_point(model, s);
}

double as_double(Fraction f) {
  return static_cast<double>(f.numerator()) / static_cast<double>(f.denominator());
}

// alpha0' eta' / (alpha0 eta'').
double asymmetry_ratio(GroupKind group, const ThermoPoint& tp) {
  return alpha0_log_derivative(group, tp) * tp.beta_star / tp.eta_pp;
}

// log sqrt(-eta'' / (2 pi)).
double log_gauss_norm(const ThermoPoint& tp) { return 0.5 * std::log(-tp.eta_pp / (2.0 * kPi)); }

bool at_infinite_temperature(const ThermoPoint& tp) { return std::abs(tp.beta_star) < kDeltaTolerance; }

}  // namespace

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::f_below_half:
      return "f_below_half";
    case Regime::f_half:
      return "f_half";
    case Regime::f_above_half:
      return "f_above_half";
  }
  return "?";
}

Regime regime_of(Fraction f) {
  const Fraction half{1, 2};
  if (f < half) return Regime::f_below_half;
  if (f == half) return Regime::f_half;
  return Regime::f_above_half;
}

double EntropyEstimate::total(double n) const { return term_N * n + term_sqrtN * std::sqrt(n) + term_O1; }

double lattice_spacing(const ChargeModel& model) {
  const auto w = weight_multiplicities(model);
  const int first = w.begin()->first.twice;
  int g = 0;
  for (const auto& [q, a] : w) g = std::gcd(g, q.twice - first);
  return g == 0 ? 1.0 : 0.5 * g;
}

double alpha0_log_derivative(GroupKind group, const ThermoPoint& tp) {
  if (group == GroupKind::U1) return 0.0;
  // alpha0 = 1 - e^{beta}, beta' = eta''.
  const double e = std::exp(tp.beta_star);
  return -e * tp.eta_pp / (-std::expm1(tp.beta_star));
}

double asymptotic_log_dim(const ChargeModel& model, double s, int n) {
  if (n < 1) throw DomainError("number of bodies must be >= 1");
  const ThermoPoint tp = checked_point(model, s);
  return std::log(tp.alpha0) + 0.5 * std::log(-tp.eta_pp / (2.0 * kPi * n)) + n * tp.eta +
         std::log(lattice_spacing(model));
}

DensityMoments charge_density_moments(const ChargeModel& model, double f, double s) {
  require_open_fraction(f);
  const ThermoPoint tp = checked_point(model, s);
  DensityMoments m;
  m.variance = (1.0 - f) / (-tp.eta_pp * f);
  m.mean_shift = alpha0_log_derivative(model.group(), tp) * m.variance;
  return m;
}

double SubsystemChargeDistribution::moment(double center, int power) const {
  double acc = 0.0;
  for (const auto& [t, p] : support) acc += p * std::pow(t - center, power);
  return acc;
}

SubsystemChargeDistribution subsystem_charge_distribution(const BlockTable& blocks) {
  SubsystemChargeDistribution dist{blocks.n_total, blocks.n_a, blocks.q_total, {}};
  const double log_total = log_big(blocks.total);
  for (const auto& blk : blocks.blocks) {
    const double p = std::exp(log_big(blk.d) + log_big(blk.b) - log_total);
    dist.support.emplace_back(blk.q_a.physical() / blocks.n_a, p);
  }
  return dist;
}

EntropyEstimate average_entropy_asymptotic(const ChargeModel& model, Fraction f, double s) {
  require_open_fraction(f);
  const ThermoPoint tp = checked_point(model, s);
  const double fd = as_double(f);
  const double log_alpha0 = std::log(tp.alpha0);
  const double ratio = asymmetry_ratio(model.group(), tp);

  EntropyEstimate est;
  est.thermo = tp;
  est.regime = regime_of(f);
  switch (est.regime) {
    case Regime::f_below_half:
      est.term_N = fd * tp.eta;
      est.term_O1 = (std::log1p(-fd) + fd) / 2.0 + log_alpha0 - (1.0 - fd) * ratio;
      break;
    case Regime::f_half:
      est.term_N = 0.5 * tp.eta;
      est.term_sqrtN = -std::sqrt(tp.c_star / (2.0 * kPi));
      est.term_O1 = (std::log(0.5) + 0.5) / 2.0 + 0.5 * log_alpha0;
      if (at_infinite_temperature(tp)) {
        est.includes_delta = true;
        est.term_O1 -= (tp.alpha0 + 1.0 / tp.alpha0) / 4.0;
      }
      break;
    case Regime::f_above_half:
      est.term_N = (1.0 - fd) * tp.eta;
      est.term_O1 = (std::log(fd) + 1.0 - fd) / 2.0 + (1.0 - fd) * ratio;
      break;
  }
  return est;
}

EntropyBreakdown entropy_term_breakdown(const ChargeModel& model, Fraction f, double s) {
  require_open_fraction(f);
  const ThermoPoint tp = checked_point(model, s);
  const double fd = as_double(f);
  const double log_alpha0 = std::log(tp.alpha0);
  const double lg = log_gauss_norm(tp);
  const double ratio = asymmetry_ratio(model.group(), tp);

  EntropyBreakdown out;
  // Y1 = Psi(D + 1) ~ log D.
  out.y1 = {tp.eta, 0.0, -0.5, log_alpha0 + lg};

  // Y2 = -<max(log d, log b)> over rho_N(t).
  switch (regime_of(f)) {
    case Regime::f_below_half:
      out.y2 = {-(1.0 - fd) * tp.eta, 0.0, 0.5,
                (std::log1p(-fd) + fd) / 2.0 - (1.0 - fd) * ratio - lg};
      break;
    case Regime::f_half:
      out.y2 = {-0.5 * tp.eta, -std::sqrt(tp.beta_star * tp.beta_star / (-2.0 * kPi * tp.eta_pp)), 0.5,
                (std::log(0.5) + 0.5) / 2.0 - 0.5 * log_alpha0 - lg};
      break;
    case Regime::f_above_half:
      out.y2 = {-fd * tp.eta, 0.0, 0.5,
                (std::log(fd) + 1.0 - fd) / 2.0 + (1.0 - fd) * ratio - log_alpha0 - lg};
      break;
  }

  // Y3 survives only at f = 1/2 and infinite temperature.
  if (regime_of(f) == Regime::f_half && at_infinite_temperature(tp))
    out.y3.term_O1 = -(tp.alpha0 + 1.0 / tp.alpha0) / 4.0;
  return out;
}

double VarianceAsymptotic::log_variance(double n) const {
  return log_variance_prefactor_coeff + 1.5 * std::log(n) - n * rate;
}

VarianceAsymptotic variance_asymptotic(const ChargeModel& model, Fraction f, double s) {
  require_open_fraction(f);
  const ThermoPoint tp = checked_point(model, s);
  if (at_infinite_temperature(tp))
    throw DomainError("variance asymptotics undefined at infinite temperature (beta* = 0)");
  const double fd = as_double(f);
  const double root = std::sqrt(2.0 * kPi);
  double shape = root * fd * (1.0 - fd);
  if (regime_of(f) == Regime::f_half) shape -= 1.0 / root;
  VarianceAsymptotic v;
  v.rate = tp.eta;
  v.log_variance_prefactor_coeff =
      std::log(shape) + 1.5 * std::log(tp.c_star) - std::log(tp.alpha0) - std::log(std::abs(tp.beta_star));
  return v;
}

}  // namespace chargent
