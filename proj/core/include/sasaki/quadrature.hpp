#pragma once

// Adaptive composite Simpson quadrature over small vector integrands.
// Used to integrate jet coefficients along v-segments (the only
// non-closed-form ingredient of the normal-form metric).

#include <functional>
#include <vector>

namespace sasaki {

struct QuadratureOptions {
  double abstol = 1e-10;
  // Tightened when third-order jets are requested downstream.
  double abstol_order3 = 1e-12;
  int max_depth = 52;

  double tol_for_order(int order) const {
    return order >= 3 ? abstol_order3 : abstol;
  }
};

// Integrates f over [a, b] componentwise; all components share the
// subdivision so their values stay consistent.  `breakpoints` lists interior
// locations where the integrand is only C^1 (interpolant knots); the interval
// is split there before adaptivity starts.  Throws AccuracyError if the
// requested absolute tolerance cannot be met within the depth budget.
std::vector<double> integrate_adaptive(
    const std::function<std::vector<double>(double)>& f, double a, double b,
    double abstol, int max_depth, const std::vector<double>& breakpoints = {});

}  // namespace sasaki
