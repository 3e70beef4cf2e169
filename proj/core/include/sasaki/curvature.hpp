#pragma once

// Classical tensor-calculus curvature: Christoffel symbols, Riemann, Ricci,
// scalar curvature and the Einstein tensor, all evaluated through jet
// arithmetic so that covariant derivatives of curvature are exact.
//
// Index convention (fixed for the whole codebase and pinned by test):
//   R^i_{jkl} = d_k Gamma^i_{lj} - d_l Gamma^i_{kj}
//             + Gamma^i_{km} Gamma^m_{lj} - Gamma^i_{lm} Gamma^m_{kj},
// i.e. R^i_{jkl} e_i = R(e_k, e_l) e_j, and Ric_{jl} = R^i_{jil}.  With this
// choice the unit round 3-sphere has Ric = +2 g and R(X,Y)Z =
// g(Y,Z)X - g(X,Z)Y.

#include <array>

#include "sasaki/metric.hpp"

namespace sasaki {

// Vector field over (r,u,v) with jet-carrying components.
using VectorFieldJets = std::function<Vec3<Jet3d>(const Point3&, int order)>;

struct ChristoffelJets {
  // gamma[i][j][k] = Gamma^i_{jk}, symmetric in (j,k).
  std::array<std::array<std::array<Jet3d, 3>, 3>, 3> gamma;
  MetricJets g;
  MetricJets ginv;
};

struct CurvatureJets {
  ChristoffelJets chris;
  // riemann_up[i][j][k][l] = R^i_{jkl}
  std::array<std::array<std::array<std::array<Jet3d, 3>, 3>, 3>, 3> riemann_up;
  Mat3<Jet3d> ricci;
  Jet3d scalar;
};

// Point values of the full curvature data.
struct CurvatureBundle {
  std::array<std::array<std::array<double, 3>, 3>, 3> christoffel;  // Gamma^i_{jk}
  std::array<std::array<std::array<std::array<double, 3>, 3>, 3>, 3> riemann_up;
  std::array<std::array<std::array<std::array<double, 3>, 3>, 3>, 3> riemann_low;
  Mat3<double> ricci;
  Mat3<double> einstein;  // E_ij = R_ij - R/2 g_ij
  double scalar = 0.0;
};

// Throws DegenerateMetricError when |det g| <= 1e-12 * scale^3 with
// scale = max |g_ij|.
void check_nondegenerate(const MetricJets& g);

ChristoffelJets christoffel_jets(const MetricEvaluator& metric, const Point3& p,
                                 int order);

// Gamma^i_{jk} values at p.
std::array<std::array<std::array<double, 3>, 3>, 3> christoffel(
    const MetricEvaluator& metric, const Point3& p);

CurvatureJets curvature_jets(const MetricEvaluator& metric, const Point3& p,
                             int g_order);

CurvatureBundle curvature(const MetricEvaluator& metric, const Point3& p);

// Symmetrized covariant derivative of the metric-dual of X; vanishes iff X
// is a Killing field at p.
Mat3<double> killing_residual(const MetricEvaluator& metric,
                              const VectorFieldJets& X, const Point3& p);

// R(X, W) Y as a coordinate vector.
Vec3<double> curvature_action(const MetricEvaluator& metric,
                              const Vec3<double>& X, const Vec3<double>& W,
                              const Vec3<double>& Y, const Point3& p);

// R(X, e0) Y with e0 the Reeb direction d/dr of normal-form structures.
Vec3<double> curvature_endomorphism(const MetricEvaluator& metric,
                                    const Vec3<double>& X,
                                    const Vec3<double>& Y, const Point3& p);

// g^{ia} g^{jb} T_ij T_ab, the invariant squared norm of a 2-tensor.
double tensor_norm2(const Mat3<double>& ginv, const Mat3<double>& T);

// Coordinate divergence of the Einstein tensor, g^{jk} (nabla_j E)_{ki};
// vanishes identically by the contracted Bianchi identity.
Vec3<double> einstein_divergence(const MetricEvaluator& metric, const Point3& p);

}  // namespace sasaki
