#include "chargent/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <ostream>
#include <thread>

#include <Eigen/Dense>

#include "chargent/errors.hpp"
#include "chargent/format.hpp"

namespace chargent {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t key = seed;
  std::uint64_t mixed = splitmix64(key);
  std::uint64_t st = stream;
  std::uint64_t sm = mixed ^ splitmix64(st);
  for (auto& w : s_) w = splitmix64(sm);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

void Rng::complex_normal(double& re, double& im) {
  const double r = std::sqrt(-2.0 * std::log(uniform()));
  const double theta = 2.0 * std::numbers::pi * uniform();
  re = r * std::cos(theta);
  im = r * std::sin(theta);
}

BlockSampler::BlockSampler(const BlockTable& blocks) {
  for (const auto& blk : blocks.blocks) {
    const double entries = to_double(blk.d) * to_double(blk.b);
    if (!(entries <= kBlockEntryBudget))
      throw SizeError("block " + to_string(blk.q_a) + " has " + to_decimal(blk.d * blk.b) +
                      " entries, above the Monte Carlo budget of 1e7");
    const int d = blk.d.convert_to<int>();
    const int b = blk.b.convert_to<int>();
    shapes_.push_back({std::min(d, b), std::max(d, b)});
  }
  log_dim_ = log_big(blocks.total);
}

std::vector<double> BlockSampler::schmidt_spectrum(Rng& rng) const {
  std::vector<double> lambdas;
  double norm = 0.0;
  Eigen::MatrixXcd m;
  Eigen::MatrixXcd gram;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver;
  for (const auto& sh : shapes_) {
    m.resize(sh.rows, sh.cols);
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        double re, im;
        rng.complex_normal(re, im);
        m(i, j) = {re, im};
      }
    const double block_norm = m.squaredNorm();
    norm += block_norm;
    if (sh.rows == 1) {
      lambdas.push_back(block_norm);
      continue;
    }
    gram.noalias() = m * m.adjoint();
    solver.compute(gram, Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
      lambdas.push_back(std::max(0.0, solver.eigenvalues()[i]));
  }
  for (double& l : lambdas) l /= norm;
  return lambdas;
}

double BlockSampler::sample(Rng& rng) const {
  double entropy = 0.0;
  for (double p : schmidt_spectrum(rng))
    if (p > 0.0) entropy -= p * std::log(p);
  return std::clamp(entropy, 0.0, log_dim_);
}

double sample_entropy(const BlockSampler& sampler, std::uint64_t seed, std::uint64_t index) {
  Rng rng(seed, index);
  return sampler.sample(rng);
}

void summarize(McRun& run) {
  const auto n = static_cast<double>(run.entropies.size());
  double sum = 0.0;
  for (double e : run.entropies) sum += e;
  run.mean = sum / n;
  double ss = 0.0;
  for (double e : run.entropies) ss += (e - run.mean) * (e - run.mean);
  run.sample_variance = run.entropies.size() > 1 ? ss / (n - 1.0) : 0.0;
  run.std_error = std::sqrt(run.sample_variance / n);
}

McRun run(const McConfig& config) {
  if (config.samples < 1) throw DomainError("samples must be >= 1");
  const BlockSampler sampler(block_table(config.model, config.n_total, config.n_a, config.q_total));

  McRun out{config, std::vector<double>(static_cast<std::size_t>(config.samples)), 0.0, 0.0, 0.0};
  int threads = config.threads > 0 ? config.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = static_cast<int>(std::clamp<std::int64_t>(threads, 1, config.samples));

  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](int t) {
    try {
      for (std::int64_t i = t; i < config.samples; i += threads)
        out.entropies[i] = sample_entropy(sampler, config.seed, static_cast<std::uint64_t>(i));
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  summarize(out);
  return out;
}

void write_dump(std::ostream& os, const McRun& run) {
  const auto& c = run.config;
  os << "# model=" << (c.model.name().empty() ? "custom" : c.model.name()) << '\n'
     << "# group=" << to_string(c.model.group()) << '\n'
     << "# n_total=" << c.n_total << '\n'
     << "# n_a=" << c.n_a << '\n'
     << "# q_total=" << to_string(c.q_total) << '\n'
     << "# samples=" << c.samples << '\n'
     << "# seed=" << c.seed << '\n'
     << "entropy\n";
  for (double e : run.entropies) os << format_double(e) << '\n';
}

}  // namespace chargent
