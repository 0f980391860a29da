#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <boost/math/special_functions/digamma.hpp>

#include "chargent/asymptotics.hpp"
#include "chargent/errors.hpp"
#include "chargent/exactavg.hpp"
#include "chargent/montecarlo.hpp"

using namespace chargent;

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

double log_total(const SectorTable& t) { return log_big(t.total_states()); }

}  // namespace

TEST_CASE("digamma: standard values") {
  CHECK(digamma(1.0) == doctest::Approx(-kEulerGamma).epsilon(1e-15));
  CHECK(digamma(2.0) == doctest::Approx(1 - kEulerGamma).epsilon(1e-15));
  CHECK(std::abs(digamma(1e6 + 1) - std::log(1e6) - 0.5e-6) < 1e-12);
  CHECK_THROWS_AS(digamma(0.0), DomainError);
  CHECK_THROWS_AS(digamma(-1.5), DomainError);
}

TEST_CASE("digamma: against the reference implementation") {
  // Relative to max(1, |ref|): near x = 1e-3, |psi| ~ 1e3 and one ulp is
  // already 1.1e-13.
  double worst = 0;
  for (double lx = -3; lx <= 12; lx += 0.01) {
    const double x = std::pow(10.0, lx);
    const double ref = boost::math::digamma(x);
    worst = std::max(worst, std::abs(digamma(x) - ref) / std::max(1.0, std::abs(ref)));
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("digamma of huge integers") {
  const BigInt x = BigInt{1} << 200;
  CHECK(digamma_plus_one(x) == doctest::Approx(200 * std::log(2.0)).epsilon(1e-15));
  CHECK(digamma_plus_one(BigInt{0}) == doctest::Approx(-kEulerGamma).epsilon(1e-15));
  const BigInt edge = (BigInt{1} << 53) - 1;
  CHECK(digamma_plus_one(edge) == doctest::Approx(digamma_plus_one(edge + 2)).epsilon(1e-15));
}

TEST_CASE("single-state sector has zero entropy") {
  const ExactAverage e = exact_average_entropy(catalog("u1-qubit"), 8, 3, {8});
  CHECK(std::abs(e.value) < 1e-15);
}

TEST_CASE("degenerate geometries") {
  const ExactAverage e = exact_average_entropy(catalog("u1-qubit"), 8, 0, {0});
  CHECK(e.degenerate);
  CHECK(e.value == 0.0);
  CHECK(exact_average_entropy(catalog("u1-qubit"), 8, 8, {0}).degenerate);
  CHECK_THROWS_AS(exact_average_entropy(catalog("u1-qubit"), 8, 8, {1}), EmptySectorError);
  CHECK_THROWS_AS(exact_average_entropy(catalog("u1-qubit"), 8, 4, {1}), EmptySectorError);
}

TEST_CASE("unconstrained single block reproduces the Page formula") {
  // One block with d = m <= b = n: sum_{k=n+1}^{mn} 1/k - (m-1)/(2n).
  const ChargeModel model(GroupKind::U1, {{{0}, 2}, {{2}, 1}});
  const BlockTable bt = block_table(model, 4, 2, {8});  // all bodies in the top state: d = b = 1
  CHECK(std::abs(exact_average_entropy(bt).value) < 1e-15);
  for (auto [m, n] : {std::pair{2, 2}, {3, 5}, {4, 9}}) {
    BlockTable manual{model, 4, 2, {0}, {Block{{0}, m, n}}, BigInt{m * n}};
    double page = 0;
    for (int k = n + 1; k <= m * n; ++k) page += 1.0 / k;
    page -= (m - 1.0) / (2 * n);
    CHECK(exact_average_entropy(manual).value == doctest::Approx(page).epsilon(1e-13));
  }
}

TEST_CASE("property: exact average invariants") {
  for (auto name : catalog_names()) {
    const ChargeModel model = catalog(name);
    for (int n = 2; n <= 12; ++n) {
      const SectorTable whole = sector_dims(model, n);
      for (int n_a = 1; n_a < n; ++n_a) {
        const double bound =
            std::min(log_total(sector_dims(model, n_a)), log_total(sector_dims(model, n - n_a)));
        for (const auto& [q, d] : whole.dims) {
          CAPTURE(name);
          CAPTURE(n);
          CAPTURE(n_a);
          const ExactAverage e = exact_average_entropy(model, n, n_a, q);
          CHECK(std::abs(e.value - (e.y1 + e.y2 + e.y3)) < 1e-12);
          CHECK(e.value >= -1e-12);
          CHECK(e.value <= bound + 1e-9);
          CHECK(e.y3 <= 0.0);
          CHECK(e.y3 >= -0.5 - 1e-12);
          if (n_a + 1 < n) CHECK(e.value <= exact_average_entropy(model, n, n_a + 1, q).value + std::log(model.local_dimension()));
        }
      }
    }
  }
}

TEST_CASE("exchange symmetry for U1") {
  // Holds for U1, where the B-sector dimension at q - q_A is the A table
  // of the mirrored geometry. The SU2 blocks are not symmetric under the
  // swap, so there is no such identity there.
  for (auto name : {"u1-qubit", "u1-qutrit", "u1-2bosons"}) {
    const ChargeModel model = catalog(name);
    for (int n = 2; n <= 14; ++n)
      for (int n_a = 1; n_a < n; ++n_a)
        for (const auto& [q, d] : sector_dims(model, n).dims)
          CHECK(exact_average_entropy(model, n, n_a, q).value == exact_average_entropy(model, n, n - n_a, q).value);
  }
}

TEST_CASE("large sectors stay finite and accurate") {
  const ExactAverage e = exact_average_entropy(catalog("su2-trimer"), 120, 40, {60});
  CHECK(std::isfinite(e.value));
  const EntropyEstimate a = average_entropy_asymptotic(catalog("su2-trimer"), {1, 3}, 0.25);
  CHECK(std::abs(e.value - a.total(120)) < 0.05);
}

TEST_CASE("half-system U1 qubit approaches the asymptotic series") {
  const ChargeModel model = catalog("u1-qubit");
  const EntropyEstimate a = average_entropy_asymptotic(model, {1, 2}, 0.0);
  double prev = INFINITY;
  for (int n : {16, 24, 32, 48, 64}) {
    const double diff = std::abs(exact_average_entropy(model, n, n / 2, {0}).value - a.total(n));
    CHECK(diff < prev);
    CHECK(diff * std::sqrt(n) < 0.1);
    prev = diff;
  }
}

TEST_CASE("Monte Carlo oracle on a small sector") {
  // (u1-qubit, 8, 4, m=0) has D = 70.
  const ChargeModel model = catalog("u1-qubit");
  const ExactAverage e = exact_average_entropy(model, 8, 4, {0});
  const McRun mc = run({model, 8, 4, {0}, 100000, 2024, 0});
  CHECK(std::abs(mc.mean - e.value) < 3 * mc.std_error);
}

TEST_CASE("small sectors against 1e6 Monte Carlo samples") {
  struct Case {
    const char* model;
    int n, n_a, twice;
  };
  for (Case c : {Case{"su2-qubit", 8, 4, 4}, Case{"u1-2bosons", 4, 2, 4}, Case{"su2-qutrit", 5, 2, 6}}) {
    const ChargeModel model = catalog(c.model);
    const BlockTable bt = block_table(model, c.n, c.n_a, {c.twice});
    REQUIRE(bt.total <= 50);
    const ExactAverage e = exact_average_entropy(bt);
    const McRun mc = run({model, c.n, c.n_a, {c.twice}, 1000000, 99, 0});
    CAPTURE(c.model);
    CHECK(std::abs(mc.mean - e.value) < 4 * mc.std_error);
  }
}
