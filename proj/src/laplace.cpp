#include "chargent/laplace.hpp"

#include <cmath>
#include <numbers>

#include "chargent/errors.hpp"

namespace chargent {

namespace {

void check_problem(const LaplaceProblem& p) {
  if (!(p.t1 < p.t0 && p.t0 < p.t2)) throw DomainError("Laplace maximum must be interior");
  if (std::abs(p.g1) > 1e-10) throw DomainError("g'(t0) must vanish at the maximum");
  if (!(p.g2 < 0.0)) throw DomainError("g''(t0) must be negative: t0 is not a maximum");
}

// Shared O(1/n) correction; jets enter through their averages.
double c1_from(const LaplaceProblem& p, double h, double h1, double h2) {
  const double g2 = p.g2;
  return -h2 / (2.0 * h * g2) + h1 * p.g3 / (2.0 * h * g2 * g2) -
         5.0 * p.g3 * p.g3 / (24.0 * g2 * g2 * g2) + p.g4 / (8.0 * g2 * g2);
}

double gaussian_scale(const LaplaceProblem& p, double n) {
  return std::sqrt(2.0 * std::numbers::pi / (-p.g2 * n)) * std::exp(n * p.g0);
}

}  // namespace

LaplaceSmooth laplace_smooth(const LaplaceProblem& p, double n) {
  check_problem(p);
  if (!(p.h_minus == p.h_plus)) throw DomainError("laplace_smooth needs a continuous prefactor");
  const auto& h = p.h_plus;
  if (h.value == 0.0) throw DomainError("prefactor vanishes at the maximum");
  LaplaceSmooth out;
  out.c1 = c1_from(p, h.value, h.d1, h.d2);
  out.value = (1.0 + out.c1 / n) * gaussian_scale(p, n) * h.value;
  return out;
}

LaplaceDiscontinuous laplace_discontinuous(const LaplaceProblem& p, double n) {
  check_problem(p);
  const auto& hm = p.h_minus;
  const auto& hp = p.h_plus;
  const double sum = hm.value + hp.value;
  if (sum == 0.0) throw DomainError("one-sided prefactor limits sum to zero");

  LaplaceDiscontinuous out;
  out.c_half = (2.0 * (hp.d1 - hm.d1) / sum + (2.0 / 3.0) * (hm.value - hp.value) / sum * p.g3 / p.g2) /
               std::sqrt(-2.0 * std::numbers::pi * p.g2);
  out.c_one = c1_from(p, 0.5 * sum, 0.5 * (hm.d1 + hp.d1), 0.5 * (hm.d2 + hp.d2));
  out.value = (1.0 + out.c_half / std::sqrt(n) + out.c_one / n) * gaussian_scale(p, n) * 0.5 * sum;
  return out;
}

}  // namespace chargent
