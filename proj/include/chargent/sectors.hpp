#pragma once

#include <map>
#include <vector>

#include "chargent/bigint.hpp"
#include "chargent/models.hpp"

namespace chargent {

/// Coefficients of the n-th power of the local character in the weight
/// basis, i.e. the number of product states with total weight m.
/// For n = 0 returns {0: 1}.
std::map<DoubledCharge, BigInt> weight_counts(const ChargeModel& model, int n);

/// Exact intertwiner dimensions D_q for n bodies.
struct SectorTable {
  ChargeModel model;
  int n = 0;
  std::map<DoubledCharge, BigInt> dims;  // only nonzero entries

  BigInt at(DoubledCharge q) const;
  /// Sum of D_q (U1) or of (2j+1) D_j (SU2); equals k^n.
  BigInt total_states() const;
};

/// U1: D_m = W(m). SU2: D_j = W(j) - W(j+1), the two-exponential split
/// of the SU(2) character integral.
SectorTable sector_dims(const ChargeModel& model, int n);

struct Block {
  DoubledCharge q_a;
  BigInt d;  // dimension of the subsystem-A sector
  BigInt b;  // dimension of the complementary sector at fixed (q, q_a)
};

struct BlockTable {
  ChargeModel model;
  int n_total = 0;
  int n_a = 0;
  DoubledCharge q_total;
  std::vector<Block> blocks;  // sorted by q_a, all d, b >= 1
  BigInt total;               // sum of d*b == D_q

  SystemGeometry geometry() const { return {n_total, n_a}; }
};

/// SU(2) coupling rule in doubled units: |ja - jb| <= j <= ja + jb with
/// j + ja + jb integer.
bool triangle(DoubledCharge j, DoubledCharge ja, DoubledCharge jb);

/// Decomposition of the fixed-charge space into (A sector) x (B sector)
/// blocks. Throws DomainError unless 1 <= n_a <= n_total - 1 and
/// EmptySectorError when q_total is not realizable.
BlockTable block_table(const ChargeModel& model, int n_total, int n_a, DoubledCharge q_total);

/// Same, reusing precomputed tables for n_a and n_total - n_a bodies.
BlockTable block_table(const SectorTable& a, const SectorTable& b, DoubledCharge q_total);

}  // namespace chargent
