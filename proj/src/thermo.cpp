#include "chargent/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "chargent/errors.hpp"

namespace chargent {

namespace {

constexpr double kDomainEps = 1e-9;
constexpr double kBisectionWidth = 1e-13;
constexpr double kEtaAgreement = 1e-10;

struct Term {
  double m;       // physical weight
  double log_a;   // log multiplicity
  double a;
};

std::vector<Term> local_terms(const ChargeModel& model) {
  std::vector<Term> t;
  for (const auto& [w, a] : weight_multiplicities(model))
    t.push_back({w.physical(), std::log(static_cast<double>(a)), static_cast<double>(a)});
  return t;
}

// Returns the max exponent and fills unnormalized shifted weights.
double shifted_weights(const std::vector<Term>& terms, double beta, std::vector<double>& out) {
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms) top = std::max(top, t.log_a - beta * t.m);
  out.resize(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i)
    out[i] = std::exp(terms[i].log_a - beta * terms[i].m - top);
  return top;
}

double mean_at(const std::vector<Term>& terms, double beta) {
  std::vector<double> w;
  shifted_weights(terms, beta, w);
  double z = 0.0;
  double num = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    z += w[i];
    num += w[i] * terms[i].m;
  }
  return num / z;
}

double check_density(const ChargeModel& model, double s) {
  const auto w = weight_multiplicities(model);
  if (w.size() < 2) throw ModelError("weight support is a single point; beta* is undefined");
  const double lo = w.begin()->first.physical();
  const double hi = w.rbegin()->first.physical();
  if (!std::isfinite(s) || s < lo + kDomainEps || s > hi - kDomainEps)
    throw DomainError("charge density " + std::to_string(s) + " outside (" + std::to_string(lo) +
                      ", " + std::to_string(hi) + "): beta* diverges");
  return s;
}

}  // namespace

double ChargeDistribution::mean() const {
  double m = 0.0;
  for (const auto& [q, p] : probabilities) m += p * q.physical();
  return m;
}

double ChargeDistribution::variance() const {
  const double mu = mean();
  double v = 0.0;
  for (const auto& [q, p] : probabilities) v += p * (q.physical() - mu) * (q.physical() - mu);
  return v;
}

ChargeDistribution gibbs(const ChargeModel& model, double beta) {
  if (!std::isfinite(beta)) throw DomainError("beta must be finite");
  const auto weights = weight_multiplicities(model);
  const auto terms = local_terms(model);
  std::vector<double> w;
  shifted_weights(terms, beta, w);
  double z = 0.0;
  for (double x : w) z += x;
  ChargeDistribution dist{beta, {}};
  std::size_t i = 0;
  for (const auto& [q, a] : weights) dist.probabilities.emplace(q, w[i++] / z);
  return dist;
}

double log_partition(const ChargeModel& model, double beta) {
  const auto terms = local_terms(model);
  std::vector<double> w;
  const double top = shifted_weights(terms, beta, w);
  double z = 0.0;
  for (double x : w) z += x;
  return top + std::log(z);
}

DensityInterval density_interval(const ChargeModel& model) {
  const auto w = weight_multiplicities(model);
  const double hi = w.rbegin()->first.physical();
  if (model.group() == GroupKind::SU2) return {0.0, hi};
  return {w.begin()->first.physical(), hi};
}

double solve_beta_star(const ChargeModel& model, double s) {
  check_density(model, s);
  const auto terms = local_terms(model);

  // mean(beta) is strictly decreasing.
  double lo = -1.0;
  double hi = 1.0;
  while (mean_at(terms, lo) < s) lo *= 2.0;
  while (mean_at(terms, hi) > s) hi *= 2.0;
  if (mean_at(terms, lo) == s) return lo;
  if (mean_at(terms, hi) == s) return hi;

  while (hi - lo > kBisectionWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double m = mean_at(terms, mid);
    if (m == s) return mid;
    if (m > s)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double eta_relative_entropy(const ChargeModel& model, double beta) {
  const auto p = gibbs(model, beta);
  const auto p0 = gibbs(model, 0.0);
  double kl = 0.0;
  for (const auto& [q, prob] : p.probabilities)
    if (prob > 0.0) kl += prob * std::log(prob / p0.probabilities.at(q));
  return std::log(static_cast<double>(model.local_dimension())) - kl;
}

double eta_legendre(const ChargeModel& model, double beta, double s) {
  return log_partition(model, beta) + beta * s;
}

ThermoPoint thermo_point(const ChargeModel& model, double s) {
  const double beta = solve_beta_star(model, s);
  const double eta_kl = eta_relative_entropy(model, beta);
  const double eta_lt = eta_legendre(model, beta, s);
  if (std::abs(eta_kl - eta_lt) > kEtaAgreement)
    throw InvariantError("local entropy routes disagree at s=" + std::to_string(s));

  const double var = gibbs(model, beta).variance();
  ThermoPoint tp;
  tp.s = s;
  tp.beta_star = beta;
  tp.eta = eta_kl;
  tp.eta_pp = -1.0 / var;
  tp.c_star = beta * beta * var;
  tp.alpha0 = model.group() == GroupKind::U1 ? 1.0 : -std::expm1(beta);
  return tp;
}

double infinite_temperature_density(const ChargeModel& model) {
  double num = 0.0;
  for (const auto& [w, a] : weight_multiplicities(model)) num += w.physical() * static_cast<double>(a);
  return num / model.local_dimension();
}

bool infinite_temperature_is_extremal(const ChargeModel& model) {
  return model.group() == GroupKind::SU2;
}

namespace {

double xlogx_over(double p, double ref) { return p > 0.0 ? p * std::log(p / ref) : 0.0; }

ThermoPoint qubit_forms(double s, bool su2) {
  const double pm = (1.0 - 2.0 * s) / 2.0;
  const double pp = (1.0 + 2.0 * s) / 2.0;
  const double var = 0.25 - s * s;
  const double beta = std::log((1.0 - 2.0 * s) / (1.0 + 2.0 * s));
  ThermoPoint tp;
  tp.s = s;
  tp.eta = -pm * std::log(pm) - pp * std::log(pp);
  tp.beta_star = beta;
  tp.c_star = var * beta * beta;
  tp.eta_pp = -1.0 / var;
  tp.alpha0 = su2 ? 4.0 * s / (1.0 + 2.0 * s) : 1.0;
  return tp;
}

ThermoPoint qutrit_forms(double s, bool su2) {
  const double r = std::sqrt(4.0 - 3.0 * s * s);
  const double pm = (4.0 - 3.0 * s - r) / 6.0;
  const double p0 = (r - 1.0) / 3.0;
  const double pp = (4.0 + 3.0 * s - r) / 6.0;
  const double log_ratio = std::log((4.0 + 3.0 * s - r) / (4.0 - 3.0 * s - r));
  ThermoPoint tp;
  tp.s = s;
  tp.eta = -pm * std::log(pm) - p0 * std::log(p0) - pp * std::log(pp);
  tp.beta_star = std::log((-s + r) / (2.0 * (1.0 + s)));
  tp.c_star = r * (r - 1.0) / 12.0 * log_ratio * log_ratio;
  // Var(m) = r (r - 1) / 3, read off c* = beta*^2 Var with log_ratio = -2 beta*.
  tp.eta_pp = -3.0 / (r * (r - 1.0));
  tp.alpha0 = su2 ? (2.0 + 3.0 * s - r) / (2.0 * (1.0 + s)) : 1.0;
  return tp;
}

ThermoPoint two_boson_forms(double s) {
  const double log_ratio = std::log((2.0 - 2.0 * s) / s);
  ThermoPoint tp;
  tp.s = s;
  tp.eta = std::log(3.0) - xlogx_over(1.0 - s, 1.0 / 3.0) - xlogx_over(s, 2.0 / 3.0);
  tp.beta_star = log_ratio;
  tp.c_star = s * (1.0 - s) * log_ratio * log_ratio;
  tp.eta_pp = -1.0 / (s * (1.0 - s));
  tp.alpha0 = 1.0;
  return tp;
}

ThermoPoint trimer_forms(double s) {
  const double lo = 3.0 - 2.0 * s;
  const double hi = 3.0 + 2.0 * s;
  const double log_ratio = std::log(lo / hi);
  const double var = 0.75 - s * s / 3.0;
  ThermoPoint tp;
  tp.s = s;
  tp.eta = -lo / 2.0 * std::log(lo / 6.0) - hi / 2.0 * std::log(hi / 6.0);
  tp.beta_star = log_ratio;
  tp.c_star = var * log_ratio * log_ratio;
  tp.eta_pp = -1.0 / var;
  tp.alpha0 = 4.0 * s / (3.0 + 2.0 * s);
  return tp;
}

}  // namespace

ThermoPoint catalog_closed_forms(std::string_view name, double s) {
  check_density(catalog(name), s);
  if (name == "u1-qubit") return qubit_forms(s, false);
  if (name == "su2-qubit") return qubit_forms(s, true);
  if (name == "u1-qutrit") return qutrit_forms(s, false);
  if (name == "su2-qutrit") return qutrit_forms(s, true);
  if (name == "u1-2bosons") return two_boson_forms(s);
  return trimer_forms(s);
}

}  // namespace chargent
