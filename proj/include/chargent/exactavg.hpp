#pragma once

#include "chargent/bigint.hpp"
#include "chargent/models.hpp"
#include "chargent/sectors.hpp"

namespace chargent {

/// Psi(x) for x > 0. Upward recurrence to x >= 10, then the asymptotic
/// series. Throws DomainError for x <= 0.
double digamma(double x);

/// Psi(x + 1) for a non-negative big integer x; falls back to log x plus the
/// asymptotic tail once x no longer fits a double exactly.
double digamma_plus_one(const BigInt& x);

/// Exact ensemble average of the entanglement entropy over Haar-random
/// states of fixed total charge:
///   value = Psi(D+1) - sum w (Psi(max+1) - 1/(2 max)) - 1/2 sum w min/max
/// with block weights w = d b / D.
struct ExactAverage {
  double value = 0.0;
  double y1 = 0.0;
  double y2 = 0.0;
  double y3 = 0.0;
  DoubledCharge q_total;
  SystemGeometry geometry{1, 0};
  bool degenerate = false;  // N_A in {0, N}: value fixed to 0
};

ExactAverage exact_average_entropy(const BlockTable& blocks);

/// Throws EmptySectorError when q_total is not realizable.
ExactAverage exact_average_entropy(const ChargeModel& model, int n_total, int n_a, DoubledCharge q_total);

}  // namespace chargent
