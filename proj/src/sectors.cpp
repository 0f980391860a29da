#include "chargent/sectors.hpp"

#include <cstdlib>
#include <string>

#include "chargent/errors.hpp"

namespace chargent {

std::map<DoubledCharge, BigInt> weight_counts(const ChargeModel& model, int n) {
  if (n < 0) throw DomainError("number of bodies must be >= 0");
  const auto local = weight_multiplicities(model);
  const int wlo = local.begin()->first.twice;
  const int span = local.rbegin()->first.twice - wlo;

  // Dense series over doubled weights; index i <-> weight lo + i.
  std::vector<BigInt> series{1};
  int lo = 0;
  for (int step = 0; step < n; ++step) {
    std::vector<BigInt> next(series.size() + span);
    for (std::size_t i = 0; i < series.size(); ++i) {
      if (series[i] == 0) continue;
      for (const auto& [w, a] : local) next[i + (w.twice - wlo)] += series[i] * a;
    }
    series = std::move(next);
    lo += wlo;
  }

  std::map<DoubledCharge, BigInt> out;
  for (std::size_t i = 0; i < series.size(); ++i)
    if (series[i] != 0) out.emplace(DoubledCharge{lo + static_cast<int>(i)}, std::move(series[i]));
  return out;
}

BigInt SectorTable::at(DoubledCharge q) const {
  auto it = dims.find(q);
  return it == dims.end() ? BigInt{0} : it->second;
}

BigInt SectorTable::total_states() const {
  BigInt sum = 0;
  for (const auto& [q, d] : dims) sum += model.group() == GroupKind::U1 ? d : d * (q.twice + 1);
  return sum;
}

SectorTable sector_dims(const ChargeModel& model, int n) {
  if (n < 0) throw DomainError("number of bodies must be >= 0");
  SectorTable table{model, n, {}};
  auto weights = weight_counts(model, n);
  if (model.group() == GroupKind::U1) {
    table.dims = std::move(weights);
    return table;
  }
  const auto w = [&](int twice) {
    auto it = weights.find(DoubledCharge{twice});
    return it == weights.end() ? BigInt{0} : it->second;
  };
  for (const auto& [m, count] : weights) {
    if (m.twice < 0) continue;
    BigInt d = count - w(m.twice + 2);
    if (d < 0) throw InvariantError("negative SU2 multiplicity at j=" + to_string(m));
    if (d > 0) table.dims.emplace(m, std::move(d));
  }
  return table;
}

bool triangle(DoubledCharge j, DoubledCharge ja, DoubledCharge jb) {
  return std::abs(ja.twice - jb.twice) <= j.twice && j.twice <= ja.twice + jb.twice &&
         (j.twice + ja.twice + jb.twice) % 2 == 0;
}

BlockTable block_table(const SectorTable& a, const SectorTable& b, DoubledCharge q_total) {
  if (!(a.model == b.model)) throw DomainError("block table needs tables of one model");
  if (a.n < 1 || b.n < 1) throw DomainError("block table needs 1 <= N_A <= N - 1");
  const ChargeModel& model = a.model;
  BlockTable table{model, a.n + b.n, a.n, q_total, {}, 0};
  if (model.group() == GroupKind::SU2 && q_total.twice < 0)
    throw EmptySectorError("SU2 total spin must be non-negative");

  for (const auto& [qa, d] : a.dims) {
    BigInt bdim = 0;
    if (model.group() == GroupKind::U1) {
      bdim = b.at(q_total - qa);
    } else {
      for (const auto& [qb, db] : b.dims)
        if (triangle(q_total, qa, qb)) bdim += db;
    }
    if (bdim == 0) continue;
    table.total += d * bdim;
    table.blocks.push_back({qa, d, std::move(bdim)});
  }
  if (table.blocks.empty())
    throw EmptySectorError("charge " + to_string(q_total) + " is not realizable with N=" +
                           std::to_string(table.n_total));
  return table;
}

BlockTable block_table(const ChargeModel& model, int n_total, int n_a, DoubledCharge q_total) {
  if (n_a < 1 || n_a > n_total - 1) throw DomainError("block table needs 1 <= N_A <= N - 1");
  return block_table(sector_dims(model, n_a), sector_dims(model, n_total - n_a), q_total);
}

}  // namespace chargent
