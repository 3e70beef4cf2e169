#include "sasaki/elliptic.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "sasaki/errors.hpp"

namespace sasaki {

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

struct Stencil {
  int nx, ny;
  double h;
  int n_interior;

  explicit Stencil(const GridField& g)
      : nx(g.nx), ny(g.ny), h(g.h), n_interior((g.nx - 2) * (g.ny - 2)) {}

  int index(int i, int j) const { return (j - 1) * (nx - 2) + (i - 1); }
  bool interior(int i, int j) const {
    return i > 0 && i < nx - 1 && j > 0 && j < ny - 1;
  }
};

// 5-point Laplacian matrix on interior nodes (Dirichlet boundary folded
// into the right-hand side by the callers).
SpMat laplacian_matrix(const Stencil& st) {
  const double ih2 = 1.0 / (st.h * st.h);
  std::vector<Triplet> trip;
  trip.reserve(static_cast<std::size_t>(st.n_interior) * 5);
  for (int j = 1; j < st.ny - 1; ++j)
    for (int i = 1; i < st.nx - 1; ++i) {
      const int row = st.index(i, j);
      trip.emplace_back(row, row, -4.0 * ih2);
      if (st.interior(i - 1, j)) trip.emplace_back(row, st.index(i - 1, j), ih2);
      if (st.interior(i + 1, j)) trip.emplace_back(row, st.index(i + 1, j), ih2);
      if (st.interior(i, j - 1)) trip.emplace_back(row, st.index(i, j - 1), ih2);
      if (st.interior(i, j + 1)) trip.emplace_back(row, st.index(i, j + 1), ih2);
    }
  SpMat A(st.n_interior, st.n_interior);
  A.setFromTriplets(trip.begin(), trip.end());
  return A;
}

// Boundary contribution of the 5-point Laplacian at interior nodes.
Eigen::VectorXd boundary_term(const Stencil& st, const GridField& bc) {
  const double ih2 = 1.0 / (st.h * st.h);
  Eigen::VectorXd t = Eigen::VectorXd::Zero(st.n_interior);
  for (int j = 1; j < st.ny - 1; ++j)
    for (int i = 1; i < st.nx - 1; ++i) {
      double s = 0.0;
      if (!st.interior(i - 1, j)) s += bc.at(i - 1, j);
      if (!st.interior(i + 1, j)) s += bc.at(i + 1, j);
      if (!st.interior(i, j - 1)) s += bc.at(i, j - 1);
      if (!st.interior(i, j + 1)) s += bc.at(i, j + 1);
      t[st.index(i, j)] = s * ih2;
    }
  return t;
}

double laplacian_at(const GridField& g, int i, int j) {
  const double ih2 = 1.0 / (g.h * g.h);
  return (g.at(i - 1, j) + g.at(i + 1, j) + g.at(i, j - 1) + g.at(i, j + 1) -
          4.0 * g.at(i, j)) *
         ih2;
}

GridField assemble_solution(const GridField& boundary,
                            const Eigen::VectorXd& interior) {
  GridField out = boundary;
  const Stencil st(boundary);
  for (int j = 1; j < out.ny - 1; ++j)
    for (int i = 1; i < out.nx - 1; ++i) out.at(i, j) = interior[st.index(i, j)];
  return out;
}

}  // namespace

GridField solve_poisson(const GridField& rhs, const GridField& boundary) {
  rhs.validate();
  boundary.validate();
  if (rhs.nx != boundary.nx || rhs.ny != boundary.ny)
    throw DomainError("rhs and boundary grids must have the same shape");

  const Stencil st(rhs);
  SpMat A = laplacian_matrix(st);
  Eigen::VectorXd b(st.n_interior);
  for (int j = 1; j < rhs.ny - 1; ++j)
    for (int i = 1; i < rhs.nx - 1; ++i) b[st.index(i, j)] = rhs.at(i, j);
  b -= boundary_term(st, boundary);

  Eigen::SparseLU<SpMat> lu;
  lu.compute(A);
  if (lu.info() != Eigen::Success)
    throw AccuracyError("Poisson system factorization failed");
  const Eigen::VectorXd x = lu.solve(b);
  if (lu.info() != Eigen::Success)
    throw AccuracyError("Poisson system solve failed");

  GridField out = assemble_solution(boundary, x);

  // certify the discrete residual
  double res = 0.0;
  for (int j = 1; j < out.ny - 1; ++j)
    for (int i = 1; i < out.nx - 1; ++i)
      res = std::max(res, std::abs(laplacian_at(out, i, j) - rhs.at(i, j)));
  if (res > 1e-10)
    throw AccuracyError("Poisson residual above certification threshold");
  return out;
}

PrescribedCurvatureResult solve_prescribed_curvature(
    const ScalarJetField& R_target, const Rect& rect, int n,
    const ScalarJetField& boundary_phi, const SolverConfig& config) {
  if (config.max_iterations < 1 || !(config.tolerance > 0.0))
    throw PreconditionError("solver config: iterations >= 1, tolerance > 0");

  GridField bc = make_grid(rect, n, n);
  GridField c = bc;  // c = (1 + R/2)/2
  bool cpos = false, cneg = false;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const double u = bc.u(i), v = bc.v(j);
      bc.at(i, j) = boundary_phi.eval(u, v, 0).value();
      const double cv = 0.5 * (1.0 + 0.5 * R_target.eval(u, v, 0).value());
      c.at(i, j) = cv;
      (cv >= 0.0 ? cpos : cneg) = true;
    }

  NewtonReport report;
  report.monotone_jacobian = !(cpos && cneg);

  // initial guess: harmonic extension of the boundary data, unless the
  // caller picked a branch explicitly
  GridField phi;
  if (config.initial_guess) {
    phi = bc;
    for (int j = 1; j < n - 1; ++j)
      for (int i = 1; i < n - 1; ++i)
        phi.at(i, j) = config.initial_guess.eval(phi.u(i), phi.v(j), 0).value();
  } else {
    GridField zero = make_grid(rect, n, n);
    phi = solve_poisson(zero, bc);
  }

  const Stencil st(phi);
  const SpMat L = laplacian_matrix(st);
  const Eigen::VectorXd bterm = boundary_term(st, bc);

  const auto pack = [&](const GridField& g) {
    Eigen::VectorXd x(st.n_interior);
    for (int j = 1; j < n - 1; ++j)
      for (int i = 1; i < n - 1; ++i) x[st.index(i, j)] = g.at(i, j);
    return x;
  };
  const auto residual_vec = [&](const Eigen::VectorXd& x) {
    Eigen::VectorXd F = L * x + bterm;
    for (int j = 1; j < n - 1; ++j)
      for (int i = 1; i < n - 1; ++i) {
        const int k = st.index(i, j);
        F[k] -= c.at(i, j) * std::exp(-2.0 * x[k]);
      }
    return F;
  };

  Eigen::VectorXd x = pack(phi);
  Eigen::VectorXd F = residual_vec(x);
  report.residual_history.push_back(F.norm());

  for (int it = 0; it < config.max_iterations; ++it) {
    if (!F.allFinite())
      throw ConvergenceError("Newton iterate left the floating range");
    report.final_residual = F.lpNorm<Eigen::Infinity>();
    if (report.final_residual <= config.tolerance) {
      report.iterations = it;
      return {assemble_solution(bc, x), report};
    }

    // J = L + diag(2 c e^{-2 phi}); the diagonal entries already exist in L
    SpMat J = L;
    for (int j = 1; j < n - 1; ++j)
      for (int i = 1; i < n - 1; ++i) {
        const int k = st.index(i, j);
        J.coeffRef(k, k) += 2.0 * c.at(i, j) * std::exp(-2.0 * x[k]);
      }

    Eigen::SparseLU<SpMat> lu;
    lu.compute(J);
    if (lu.info() != Eigen::Success)
      throw ConvergenceError("Newton Jacobian factorization failed");
    const Eigen::VectorXd d = lu.solve(-F);

    // Armijo backtracking on the residual 2-norm
    const double f0 = F.norm();
    double alpha = 1.0;
    bool accepted = false;
    for (int bt = 0; bt < config.max_backtracks; ++bt) {
      const Eigen::VectorXd xt = x + alpha * d;
      const Eigen::VectorXd Ft = residual_vec(xt);
      if (Ft.allFinite() && Ft.norm() <= (1.0 - config.armijo_c * alpha) * f0) {
        x = xt;
        F = Ft;
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted)
      throw ConvergenceError(
          "Newton line search stalled at residual " + std::to_string(f0));
    report.residual_history.push_back(F.norm());
  }

  std::ostringstream msg;
  msg << "Newton did not converge within " << config.max_iterations
      << " iterations; residual history:";
  for (double r : report.residual_history) msg << ' ' << r;
  throw ConvergenceError(msg.str());
}

}  // namespace sasaki
