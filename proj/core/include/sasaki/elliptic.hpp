#pragma once

// Dirichlet solvers on square grids: the linear Poisson problem and the
// semilinear prescribed-scalar-curvature equation
//
//   Laplacian(phi) = (1 + R/2)/2 * e^{-2 phi},      phi = ln P0,
//
// discretized with the 5-point stencil and solved by damped Newton.  Working
// with phi instead of P0 keeps P0 = e^phi positive by construction.

#include <vector>

#include "sasaki/grid.hpp"

namespace sasaki {

struct SolverConfig {
  int max_iterations = 30;
  double tolerance = 1e-10;  // sup-norm of the discrete residual
  double armijo_c = 1e-4;    // sufficient-decrease constant
  int max_backtracks = 40;
  // Newton start; empty selects the harmonic extension of the boundary
  // data.  An explicit guess picks a branch when the semilinear problem
  // has several solutions (it is Bratu-type for 1 + R/2 > 0).
  ScalarJetField initial_guess;
};

struct NewtonReport {
  int iterations = 0;
  double final_residual = 0.0;            // sup-norm
  std::vector<double> residual_history;   // 2-norms, one per accepted step
  bool monotone_jacobian = true;          // 1 + R/2 kept one sign on the grid
};

// Solves Laplacian(K) = rhs with Dirichlet data taken from the boundary
// nodes of `boundary` (same shape as rhs).  The discrete residual of the
// returned solution is certified below 1e-10.
GridField solve_poisson(const GridField& rhs, const GridField& boundary);

struct PrescribedCurvatureResult {
  GridField phi;
  NewtonReport report;
};

// Solves the prescribed-curvature problem for phi = ln P0 on an n x n grid
// over `rect` with Dirichlet data boundary_phi.  Initial guess is the
// harmonic extension of the boundary data.  Throws ConvergenceError when the
// iteration budget is exhausted or the iterate leaves the floating range.
PrescribedCurvatureResult solve_prescribed_curvature(
    const ScalarJetField& R_target, const Rect& rect, int n,
    const ScalarJetField& boundary_phi, const SolverConfig& config = {});

}  // namespace sasaki
