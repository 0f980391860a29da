#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "chargent/models.hpp"
#include "chargent/sectors.hpp"

namespace chargent {

/// Entries allowed in a single d x b block before sampling is refused.
inline constexpr double kBlockEntryBudget = 1e7;

/// xoshiro256** seeded through splitmix64 from (seed, stream). One stream per
/// sample index, so results do not depend on scheduling.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next();
  /// Uniform on (0, 1].
  double uniform();
  /// Standard complex Gaussian, E|z|^2 = 2 (polar Box-Muller).
  void complex_normal(double& re, double& im);

 private:
  std::uint64_t s_[4];
};

/// Precomputed block shapes for repeated sampling of one fixed-charge sector.
class BlockSampler {
 public:
  /// Throws SizeError when any block exceeds kBlockEntryBudget.
  explicit BlockSampler(const BlockTable& blocks);

  /// Entanglement entropy of one Haar-random state of the sector.
  double sample(Rng& rng) const;

  /// Schmidt probabilities of one sample, concatenated over blocks.
  std::vector<double> schmidt_spectrum(Rng& rng) const;

  double log_dimension() const { return log_dim_; }

 private:
  struct Shape {
    int rows;  // min(d, b)
    int cols;  // max(d, b)
  };
  std::vector<Shape> shapes_;
  double log_dim_ = 0.0;
};

struct McConfig {
  ChargeModel model;
  int n_total = 0;
  int n_a = 0;
  DoubledCharge q_total;
  std::int64_t samples = 1;
  std::uint64_t seed = 0;
  int threads = 0;  // 0: hardware concurrency
};

struct McRun {
  McConfig config;
  std::vector<double> entropies;
  double mean = 0.0;
  double std_error = 0.0;
  double sample_variance = 0.0;  // unbiased, n - 1
};

/// One sample with its own stream: identical for equal (seed, index).
double sample_entropy(const BlockSampler& sampler, std::uint64_t seed, std::uint64_t index);

/// Throws DomainError when samples < 1 or the geometry is degenerate.
McRun run(const McConfig& config);

/// Summary statistics in index order.
void summarize(McRun& run);

/// "# key=value" header lines followed by one entropy per line.
void write_dump(std::ostream& os, const McRun& run);

}  // namespace chargent
