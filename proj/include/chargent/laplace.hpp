#pragma once

namespace chargent {

/// Value and first two derivatives of a prefactor at the expansion point.
struct Jet2 {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;

  friend bool operator==(const Jet2&, const Jet2&) = default;
};

/// Integral of h(t) e^{n g(t)} over (t1, t2) with a single interior maximum
/// of g at t0. Derivatives at t0 are supplied by the caller. The prefactor h
/// may jump at t0; h_minus and h_plus are its one-sided jets.
struct LaplaceProblem {
  double t0 = 0.0;
  double t1 = -1.0;
  double t2 = 1.0;
  double g0 = 0.0;  // g(t0)
  double g1 = 0.0;  // g'(t0), must vanish
  double g2 = -1.0;
  double g3 = 0.0;
  double g4 = 0.0;
  Jet2 h_minus{1.0, 0.0, 0.0};
  Jet2 h_plus{1.0, 0.0, 0.0};
};

struct LaplaceSmooth {
  double value = 0.0;
  double c1 = 0.0;
};

/// (1 + C1/n) sqrt(2 pi / (-g'' n)) h(t0) e^{n g(t0)}.
/// Throws DomainError if g'(t0) != 0, g''(t0) >= 0, t0 is not interior or
/// h is discontinuous.
LaplaceSmooth laplace_smooth(const LaplaceProblem& problem, double n);

struct LaplaceDiscontinuous {
  double value = 0.0;
  double c_half = 0.0;
  double c_one = 0.0;
};

/// (1 + C_{1/2}/sqrt(n) + C_1/n) sqrt(2 pi / (-g'' n)) (h_- + h_+)/2 e^{n g(t0)}.
/// Throws DomainError additionally when h_-(t0) + h_+(t0) = 0.
LaplaceDiscontinuous laplace_discontinuous(const LaplaceProblem& problem, double n);

}  // namespace chargent
