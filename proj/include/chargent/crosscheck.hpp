#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chargent/models.hpp"

namespace chargent {

/// Largest sector dimension the default matrix will sample.
inline constexpr int kCrosscheckMaxDim = 1000;

/// Threshold on |MC mean - exact| / SE.
inline constexpr double kCrosscheckMaxZ = 4.0;

/// Two interior charges with the largest D_q <= max_dim; ties go to smaller
/// |q|, then to the smaller q. Interior means strictly between the extreme
/// totals for U1 and 0 < j < j_max for SU2.
std::vector<DoubledCharge> interior_charges(const ChargeModel& model, int n_total, int max_dim = kCrosscheckMaxDim);

/// Nearest realizable total charge to n s (ties to the smaller charge).
DoubledCharge snap_charge(const ChargeModel& model, int n_total, double s);

struct CrosscheckRow {
  std::string model;
  int n_total = 0;
  int n_a = 0;
  DoubledCharge q_total;
  double s = 0.0;  // q_total / n_total
  std::string dim;  // D_q, decimal
  double exact = 0.0;
  std::optional<double> asymptotic;  // absent where the formulas do not apply
  double mc_mean = 0.0;
  double mc_std_error = 0.0;
  double z = 0.0;
  bool skipped = false;
  std::string note;
  bool pass = false;
};

struct CrosscheckOptions {
  std::int64_t samples = 100000;
  std::uint64_t seed = 1;
  int threads = 0;
};

/// Compares exact, asymptotic and Monte Carlo averages at one point. Rows
/// whose blocks exceed the Monte Carlo budget are skipped rather than failed.
CrosscheckRow crosscheck_point(const ChargeModel& model, int n_total, int n_a, DoubledCharge q_total,
                               const CrosscheckOptions& options);

/// catalog x N in {8, 12} x f in {1/4, 1/2} x interior_charges.
std::vector<CrosscheckRow> default_crosscheck(const CrosscheckOptions& options);

}  // namespace chargent
