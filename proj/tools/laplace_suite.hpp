#pragma once

// Five analytic integrands h(t) e^{n g(t)} with their Laplace data, and an
// adaptive quadrature reference. Shared by laplace-check and the tests.

#include <cmath>
#include <functional>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "chargent/laplace.hpp"

namespace oracle {

// Adaptive Gauss-Kronrod on [a, b].
inline double integrate(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, 1e-15);
}

// Analytic test integrand h(t) e^{n g(t)} with its Laplace data at t0 = 0.
struct LaplaceCase {
  const char* name;
  double lo;
  double hi;
  std::function<double(double)> g;
  std::function<double(double)> h_minus;
  std::function<double(double)> h_plus;
  chargent::LaplaceProblem problem;
  bool smooth;

  double quadrature(double n) const {
    auto left = [&](double t) { return h_minus(t) * std::exp(n * g(t)); };
    auto right = [&](double t) { return h_plus(t) * std::exp(n * g(t)); };
    return integrate(left, lo, 0.0) + integrate(right, 0.0, hi);
  }
};

inline std::vector<LaplaceCase> laplace_suite() {
  using chargent::Jet2;
  std::vector<LaplaceCase> out;
  auto quartic = [](double t) { return -t * t / 2 + t * t * t / 3 - t * t * t * t / 4; };

  {
    LaplaceCase c{"gauss-cosh", -1, 1, [](double t) { return -t * t / 2; },
                  [](double t) { return std::cosh(t); }, [](double t) { return std::cosh(t); }, {}, true};
    c.problem.g2 = -1;
    c.problem.h_minus = c.problem.h_plus = Jet2{1, 0, 1};
    out.push_back(c);
  }
  {
    LaplaceCase c{"quartic-exp", -1, 1, quartic, [](double t) { return std::exp(t / 2); },
                  [](double t) { return std::exp(t / 2); }, {}, true};
    c.problem.g2 = -1;
    c.problem.g3 = 2;
    c.problem.g4 = -6;
    c.problem.h_minus = c.problem.h_plus = Jet2{1, 0.5, 0.25};
    out.push_back(c);
  }
  {
    LaplaceCase c{"cos-rational", -1, 1, [](double t) { return std::cos(t) - 1; },
                  [](double t) { return 1 / (2 + t); }, [](double t) { return 1 / (2 + t); }, {}, true};
    c.problem.g2 = -1;
    c.problem.g4 = 1;
    c.problem.h_minus = c.problem.h_plus = Jet2{0.5, -0.25, 0.25};
    out.push_back(c);
  }
  {
    LaplaceCase c{"cubic-step", -1, 1, [](double t) { return -t * t / 2 + t * t * t / 6; },
                  [](double) { return 1.0; }, [](double t) { return 2 + t; }, {}, false};
    c.problem.g2 = -1;
    c.problem.g3 = 1;
    c.problem.h_minus = Jet2{1, 0, 0};
    c.problem.h_plus = Jet2{2, 1, 0};
    out.push_back(c);
  }
  {
    LaplaceCase c{"log-exp-jump", -0.9, 1, [](double t) { return std::log1p(t) - t; },
                  [](double t) { return std::exp(t); }, [](double t) { return 3 * std::exp(-t); }, {}, false};
    c.problem.t1 = -0.9;
    c.problem.g2 = -1;
    c.problem.g3 = 2;
    c.problem.g4 = -6;
    c.problem.h_minus = Jet2{1, 1, 1};
    c.problem.h_plus = Jet2{3, -3, 3};
    out.push_back(c);
  }
  return out;
}

// Least-squares slope of log y against log x.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace oracle
