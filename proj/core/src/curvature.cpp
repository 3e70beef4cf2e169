#include "sasaki/curvature.hpp"

#include <cmath>

#include "sasaki/errors.hpp"

namespace sasaki {

void check_nondegenerate(const MetricJets& g) {
  double scale = 0.0;
  Mat3<double> gv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      gv[i][j] = g[i][j].value();
      scale = std::max(scale, std::abs(gv[i][j]));
    }
  const double d = det(gv);
  if (std::abs(d) <= 1e-12 * scale * scale * scale || scale == 0.0)
    throw DegenerateMetricError("metric determinant below degeneracy threshold");
}

ChristoffelJets christoffel_jets(const MetricEvaluator& metric, const Point3& p,
                                 int order) {
  if (order + 1 > metric.max_order())
    throw CapabilityError("metric cannot supply enough derivative orders");
  ChristoffelJets out;
  out.g = metric.components(p, order + 1);
  check_nondegenerate(out.g);
  out.ginv = inverse(out.g);

  // dg[k][i][j] = d_k g_ij
  std::array<Mat3<Jet3d>, 3> dg;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) dg[k][i][j] = out.g[i][j].deriv(k);

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = j; k < 3; ++k) {
        Jet3d sum = Jet3d::constant(0.0, order);
        for (int l = 0; l < 3; ++l)
          sum = sum + out.ginv[i][l] *
                          (dg[j][l][k] + dg[k][l][j] - dg[l][j][k]);
        sum = sum * 0.5;
        out.gamma[i][j][k] = sum;
        out.gamma[i][k][j] = sum;
      }
  return out;
}

std::array<std::array<std::array<double, 3>, 3>, 3> christoffel(
    const MetricEvaluator& metric, const Point3& p) {
  const ChristoffelJets cj = christoffel_jets(metric, p, 0);
  std::array<std::array<std::array<double, 3>, 3>, 3> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j][k] = cj.gamma[i][j][k].value();
  return out;
}

CurvatureJets curvature_jets(const MetricEvaluator& metric, const Point3& p,
                             int g_order) {
  CurvatureJets out;
  out.chris = christoffel_jets(metric, p, g_order - 1);  // Gamma at order g-1
  const auto& G = out.chris.gamma;
  const int ord = g_order - 2;

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          Jet3d r = G[i][l][j].deriv(k) - G[i][k][j].deriv(l);
          for (int m = 0; m < 3; ++m)
            r = r + G[i][k][m] * G[m][l][j] - G[i][l][m] * G[m][k][j];
          out.riemann_up[i][j][k][l] = r.truncated(ord);
        }

  for (int j = 0; j < 3; ++j)
    for (int l = 0; l < 3; ++l) {
      Jet3d s = Jet3d::constant(0.0, ord);
      for (int i = 0; i < 3; ++i) s = s + out.riemann_up[i][j][i][l];
      out.ricci[j][l] = s;
    }

  Jet3d scal = Jet3d::constant(0.0, ord);
  for (int j = 0; j < 3; ++j)
    for (int l = 0; l < 3; ++l)
      scal = scal + out.chris.ginv[j][l].truncated(ord) * out.ricci[j][l];
  out.scalar = scal;
  return out;
}

CurvatureBundle curvature(const MetricEvaluator& metric, const Point3& p) {
  const CurvatureJets cj = curvature_jets(metric, p, 2);
  CurvatureBundle b;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        b.christoffel[i][j][k] = cj.chris.gamma[i][j][k].value();
        for (int l = 0; l < 3; ++l)
          b.riemann_up[i][j][k][l] = cj.riemann_up[i][j][k][l].value();
      }
  Mat3<double> g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g[i][j] = cj.chris.g[i][j].value();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          double s = 0.0;
          for (int m = 0; m < 3; ++m) s += g[i][m] * b.riemann_up[m][j][k][l];
          b.riemann_low[i][j][k][l] = s;
        }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b.ricci[i][j] = cj.ricci[i][j].value();
  b.scalar = cj.scalar.value();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      b.einstein[i][j] = b.ricci[i][j] - 0.5 * b.scalar * g[i][j];
  return b;
}

Mat3<double> killing_residual(const MetricEvaluator& metric,
                              const VectorFieldJets& X, const Point3& p) {
  const ChristoffelJets cj = christoffel_jets(metric, p, 1);
  const Vec3<Jet3d> Xup = X(p, 1);

  // lower the index: X_i = g_ij X^j
  Vec3<Jet3d> Xlow;
  for (int i = 0; i < 3; ++i) {
    Jet3d s = Jet3d::constant(0.0, 1);
    for (int j = 0; j < 3; ++j) s = s + cj.g[i][j].truncated(1) * Xup[j];
    Xlow[i] = s;
  }

  Mat3<double> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // nabla_i X_j = d_i X_j - Gamma^k_{ij} X_k
      double nij = Xlow[j].deriv(i).value();
      double nji = Xlow[i].deriv(j).value();
      for (int k = 0; k < 3; ++k) {
        nij -= cj.gamma[k][i][j].value() * Xlow[k].value();
        nji -= cj.gamma[k][j][i].value() * Xlow[k].value();
      }
      out[i][j] = 0.5 * (nij + nji);
    }
  return out;
}

Vec3<double> curvature_action(const MetricEvaluator& metric,
                              const Vec3<double>& X, const Vec3<double>& W,
                              const Vec3<double>& Y, const Point3& p) {
  const CurvatureJets cj = curvature_jets(metric, p, 2);
  Vec3<double> out{};
  for (int i = 0; i < 3; ++i) {
    double s = 0.0;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          s += cj.riemann_up[i][j][k][l].value() * Y[j] * X[k] * W[l];
    out[i] = s;
  }
  return out;
}

Vec3<double> curvature_endomorphism(const MetricEvaluator& metric,
                                    const Vec3<double>& X,
                                    const Vec3<double>& Y, const Point3& p) {
  const Vec3<double> e0{1.0, 0.0, 0.0};
  return curvature_action(metric, X, e0, Y, p);
}

double tensor_norm2(const Mat3<double>& ginv, const Mat3<double>& T) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          s += ginv[i][a] * ginv[j][b] * T[i][j] * T[a][b];
  return s;
}

Vec3<double> einstein_divergence(const MetricEvaluator& metric,
                                 const Point3& p) {
  const CurvatureJets cj = curvature_jets(metric, p, 3);
  const auto& G = cj.chris.gamma;

  Mat3<Jet3d> E;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      E[i][j] = cj.ricci[i][j] -
                cj.chris.g[i][j].truncated(1) * cj.scalar * 0.5;

  Vec3<double> out{};
  for (int i = 0; i < 3; ++i) {
    double s = 0.0;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        // (nabla_j E)_{ki}
        double njki = E[k][i].deriv(j).value();
        for (int l = 0; l < 3; ++l)
          njki -= G[l][j][k].value() * E[l][i].value() +
                  G[l][j][i].value() * E[k][l].value();
        s += cj.chris.ginv[j][k].value() * njki;
      }
    out[i] = s;
  }
  return out;
}

}  // namespace sasaki
