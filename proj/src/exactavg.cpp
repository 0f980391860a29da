#include "chargent/exactavg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "chargent/errors.hpp"

namespace chargent {

double digamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("digamma needs a finite x > 0");
  double shift = 0.0;
  while (x < 10.0) {
    shift += 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  // Bernoulli tail: -sum B_{2k} / (2k x^{2k}).
  const double tail =
      inv2 * (1.0 / 12.0 -
              inv2 * (1.0 / 120.0 -
                      inv2 * (1.0 / 252.0 -
                              inv2 * (1.0 / 240.0 -
                                      inv2 * (1.0 / 132.0 - inv2 * (691.0 / 32760.0 - inv2 / 12.0))))));
  return std::log(x) - 0.5 / x - tail - shift;
}

double digamma_plus_one(const BigInt& x) {
  if (x < 0) throw DomainError("digamma_plus_one needs x >= 0");
  static const BigInt exact_limit = BigInt{1} << 53;
  if (x < exact_limit) return digamma(to_double(x) + 1.0);
  // Psi(x+1) = log x + 1/(2x) + O(x^-2); the remainder is below 1e-31 here.
  return log_big(x) + 0.5 / to_double(x);
}

ExactAverage exact_average_entropy(const BlockTable& blocks) {
  ExactAverage out;
  out.q_total = blocks.q_total;
  out.geometry = blocks.geometry();

  const double log_total = log_big(blocks.total);
  out.y1 = digamma_plus_one(blocks.total);
  // Per-block terms are summed in sorted order so that the result does not
  // depend on the block order (N_A <-> N_B gives the same multiset).
  std::vector<std::pair<double, double>> terms;
  terms.reserve(blocks.blocks.size());
  for (const auto& blk : blocks.blocks) {
    const double w = std::exp(log_big(blk.d) + log_big(blk.b) - log_total);
    const bool d_larger = blk.d >= blk.b;
    const BigInt& big = d_larger ? blk.d : blk.b;
    const BigInt& small = d_larger ? blk.b : blk.d;
    terms.emplace_back(w * (digamma_plus_one(big) - 0.5 / to_double(big)),
                       0.5 * w * std::exp(log_big(small) - log_big(big)));
  }
  std::sort(terms.begin(), terms.end());
  for (const auto& [t2, t3] : terms) {
    out.y2 -= t2;
    out.y3 -= t3;
  }
  out.value = out.y1 + out.y2 + out.y3;
  return out;
}

ExactAverage exact_average_entropy(const ChargeModel& model, int n_total, int n_a, DoubledCharge q_total) {
  const SystemGeometry geometry(n_total, n_a);
  if (geometry.is_degenerate()) {
    if (sector_dims(model, n_total).at(q_total) == 0)
      throw EmptySectorError("charge " + to_string(q_total) + " is not realizable");
    ExactAverage out;
    out.q_total = q_total;
    out.geometry = geometry;
    out.degenerate = true;
    return out;
  }
  return exact_average_entropy(block_table(model, n_total, n_a, q_total));
}

}  // namespace chargent
