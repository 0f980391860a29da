#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "chargent/errors.hpp"
#include "chargent/exactavg.hpp"
#include "chargent/montecarlo.hpp"
#include "oracles.hpp"

using namespace chargent;

TEST_CASE("rng streams are deterministic and distinct") {
  Rng a(5, 0), b(5, 0), c(5, 1), d(6, 0);
  const auto x = a.next();
  CHECK(x == b.next());
  CHECK(x != c.next());
  CHECK(x != d.next());
  Rng u(1, 2);
  double sum = 0, sum_sq = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    double re, im;
    u.complex_normal(re, im);
    sum += re + im;
    sum_sq += re * re + im * im;
  }
  CHECK(std::abs(sum / (2 * n)) < 0.01);
  CHECK(std::abs(sum_sq / (2 * n) - 1.0) < 0.01);
  Rng v(3, 3);
  for (int i = 0; i < 1000; ++i) {
    const double x01 = v.uniform();
    CHECK(x01 > 0.0);
    CHECK(x01 <= 1.0);
  }
}

TEST_CASE("one-dimensional sector has zero entropy") {
  const McRun r = run({catalog("u1-qubit"), 6, 2, {6}, 100, 1, 1});
  for (double e : r.entropies) CHECK(e == 0.0);
  CHECK(r.std_error == 0.0);
}

TEST_CASE("single block with d = 1 has zero entropy") {
  // u1-qubit, N = 4, N_A = 1, m = 2 (doubled 4): only q_A = +1/2 fits, d = 1.
  const BlockTable bt = block_table(catalog("u1-qubit"), 4, 1, {4});
  REQUIRE(bt.blocks.size() == 1);
  REQUIRE(bt.blocks[0].d == 1);
  const BlockSampler sampler(bt);
  for (std::uint64_t i = 0; i < 50; ++i) CHECK(sample_entropy(sampler, 9, i) == 0.0);
}

TEST_CASE("Schmidt spectrum is normalized") {
  for (auto name : catalog_names()) {
    const ChargeModel model = catalog(name);
    const BlockTable bt = block_table(model, 8, 4, sector_dims(model, 8).dims.rbegin()->first);
    const BlockTable mid = block_table(model, 8, 3, std::next(sector_dims(model, 8).dims.begin(), 2)->first);
    for (const BlockTable* t : {&bt, &mid}) {
      const BlockSampler sampler(*t);
      for (std::uint64_t i = 0; i < 20; ++i) {
        Rng rng(11, i);
        const auto p = sampler.schmidt_spectrum(rng);
        CHECK(std::abs(std::accumulate(p.begin(), p.end(), 0.0) - 1.0) < 1e-12);
        Rng again(11, i);
        const double s = sampler.sample(again);
        CHECK(s >= 0.0);
        CHECK(s <= sampler.log_dimension() + 1e-9);
      }
    }
  }
}

TEST_CASE("runs are reproducible and independent of the thread count") {
  McConfig cfg{catalog("su2-qutrit"), 8, 4, {4}, 3000, 42, 1};
  const McRun a = run(cfg);
  const McRun b = run(cfg);
  cfg.threads = 4;
  const McRun c = run(cfg);
  CHECK(a.entropies == b.entropies);
  CHECK(a.entropies == c.entropies);
  CHECK(a.mean == c.mean);
  CHECK(a.std_error == c.std_error);
  cfg.seed = 43;
  CHECK(run(cfg).entropies != a.entropies);
}

TEST_CASE("summary statistics match the stored samples") {
  const McRun r = run({catalog("u1-qutrit"), 6, 3, {0}, 5000, 3, 0});
  const double n = static_cast<double>(r.entropies.size());
  const double mean = std::accumulate(r.entropies.begin(), r.entropies.end(), 0.0) / n;
  double ss = 0;
  for (double e : r.entropies) ss += (e - mean) * (e - mean);
  CHECK(std::abs(r.mean - mean) < 1e-12);
  CHECK(std::abs(r.sample_variance - ss / (n - 1)) < 1e-12);
  CHECK(std::abs(r.std_error - std::sqrt(ss / (n - 1) / n)) < 1e-12);
  const double log_d = log_big(sector_dims(catalog("u1-qutrit"), 6).at({0}));
  for (double e : r.entropies) {
    CHECK(e >= 0.0);
    CHECK(e <= log_d + 1e-9);
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(run({catalog("u1-qubit"), 8, 4, {0}, 0, 1, 1}), DomainError);
  CHECK_THROWS_AS(run({catalog("u1-qubit"), 8, 4, {1}, 10, 1, 1}), EmptySectorError);
  // d = b = binomial(30, 15) ~ 1.55e8 per side: far over budget.
  CHECK_THROWS_AS(BlockSampler(block_table(catalog("u1-qubit"), 60, 30, {0})), SizeError);
}

TEST_CASE("mean matches the exact average") {
  const ChargeModel model = catalog("u1-qubit");
  const McRun r = run({model, 8, 4, {0}, 100000, 7, 0});
  CHECK(std::abs(r.mean - exact_average_entropy(model, 8, 4, {0}).value) < 3 * r.std_error);
}

TEST_CASE("typicality: samples concentrate at N = 16") {
  const McRun r = run({catalog("u1-qubit"), 16, 8, {0}, 4000, 5, 0});
  const double width = 5 * std::sqrt(r.sample_variance);
  const auto inside =
      std::count_if(r.entropies.begin(), r.entropies.end(), [&](double e) { return std::abs(e - r.mean) <= width; });
  CHECK(static_cast<double>(inside) / r.entropies.size() >= 0.99);
}

TEST_CASE("variance shrinks with N roughly like exp(-N eta)") {
  const McRun r12 = run({catalog("u1-qubit"), 12, 6, {0}, 4000, 8, 0});
  const McRun r16 = run({catalog("u1-qubit"), 16, 8, {0}, 4000, 8, 0});
  const double ratio = r12.sample_variance / r16.sample_variance;
  const double predicted = std::exp(4 * std::log(2.0));
  CHECK(ratio > predicted / 5);
  CHECK(ratio < predicted * 5);
}

TEST_CASE("U1 swap of the subsystems leaves the distribution unchanged") {
  for (auto [name, twice] : {std::pair{"u1-qubit", 1}, {"u1-2bosons", 10}}) {
    const McRun a = run({catalog(name), 9, 3, {twice}, 10000, 21, 0});
    const McRun b = run({catalog(name), 9, 6, {twice}, 10000, 22, 0});
    CAPTURE(name);
    CHECK(oracle::ks_pvalue(a.entropies, b.entropies) > 0.001);
  }
}

TEST_CASE("raw sample dump") {
  const McRun r = run({catalog("su2-qubit"), 6, 3, {2}, 5, 77, 1});
  std::ostringstream os;
  write_dump(os, r);
  const std::string text = os.str();
  CHECK(text.find("# model=su2-qubit\n") != std::string::npos);
  CHECK(text.find("# seed=77\n") != std::string::npos);
  CHECK(text.find("# q_total=1\n") != std::string::npos);
  std::istringstream in(text);
  std::string line;
  int values = 0;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.starts_with("#")) continue;
    if (line == "entropy") {
      header = true;
      continue;
    }
    CHECK(std::stod(line) == r.entropies[values]);
    ++values;
  }
  CHECK(header);
  CHECK(values == 5);
}
