#include "chargent/crosscheck.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "chargent/asymptotics.hpp"
#include "chargent/errors.hpp"
#include "chargent/exactavg.hpp"
#include "chargent/montecarlo.hpp"
#include "chargent/sectors.hpp"

namespace chargent {

std::vector<DoubledCharge> interior_charges(const ChargeModel& model, int n_total, int max_dim) {
  const SectorTable table = sector_dims(model, n_total);
  const DoubledCharge lo = table.dims.begin()->first;
  const DoubledCharge hi = table.dims.rbegin()->first;
  std::vector<std::pair<DoubledCharge, BigInt>> candidates;
  for (const auto& [q, d] : table.dims) {
    const bool interior = model.group() == GroupKind::U1 ? (lo < q && q < hi) : (q.twice > 0 && q < hi);
    if (interior && d <= max_dim) candidates.emplace_back(q, d);
  }
  std::sort(candidates.begin(), candidates.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    if (std::abs(x.first.twice) != std::abs(y.first.twice)) return std::abs(x.first.twice) < std::abs(y.first.twice);
    return x.first < y.first;
  });
  std::vector<DoubledCharge> out;
  for (std::size_t i = 0; i < candidates.size() && i < 2; ++i) out.push_back(candidates[i].first);
  std::sort(out.begin(), out.end());
  return out;
}

DoubledCharge snap_charge(const ChargeModel& model, int n_total, double s) {
  const SectorTable table = sector_dims(model, n_total);
  const double target = s * n_total;
  DoubledCharge best = table.dims.begin()->first;
  double best_gap = INFINITY;
  for (const auto& [q, d] : table.dims) {
    const double gap = std::abs(q.physical() - target);
    if (gap < best_gap - 1e-12) {
      best = q;
      best_gap = gap;
    }
  }
  return best;
}

CrosscheckRow crosscheck_point(const ChargeModel& model, int n_total, int n_a, DoubledCharge q_total,
                               const CrosscheckOptions& options) {
  CrosscheckRow row;
  row.model = model.name().empty() ? "custom" : model.name();
  row.n_total = n_total;
  row.n_a = n_a;
  row.q_total = q_total;
  row.s = q_total.physical() / n_total;

  const BlockTable blocks = block_table(model, n_total, n_a, q_total);
  row.dim = to_decimal(blocks.total);
  row.exact = exact_average_entropy(blocks).value;
  try {
    row.asymptotic = average_entropy_asymptotic(model, Fraction{n_a, n_total}, row.s).total(n_total);
  } catch (const DomainError& e) {
    row.note = e.what();
  }

  try {
    const McRun mc = run({model, n_total, n_a, q_total, options.samples, options.seed, options.threads});
    row.mc_mean = mc.mean;
    row.mc_std_error = mc.std_error;
  } catch (const SizeError& e) {
    row.skipped = true;
    row.note = e.what();
    row.pass = true;
    return row;
  }
  const double diff = std::abs(row.mc_mean - row.exact);
  if (row.mc_std_error > 0.0) {
    row.z = diff / row.mc_std_error;
    row.pass = row.z < kCrosscheckMaxZ;
  } else {
    row.pass = diff < 1e-9;
  }
  return row;
}

std::vector<CrosscheckRow> default_crosscheck(const CrosscheckOptions& options) {
  std::vector<CrosscheckRow> rows;
  for (std::string_view name : catalog_names()) {
    const ChargeModel model = catalog(name);
    for (int n : {8, 12})
      for (int n_a : {n / 4, n / 2})
        for (DoubledCharge q : interior_charges(model, n)) rows.push_back(crosscheck_point(model, n, n_a, q, options));
  }
  return rows;
}

}  // namespace chargent
