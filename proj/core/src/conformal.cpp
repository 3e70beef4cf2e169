#include "sasaki/conformal.hpp"

#include <cmath>

namespace sasaki {

WeylSchouten weyl_schouten(const MetricEvaluator& metric, const Point3& p) {
  const CurvatureJets cj = curvature_jets(metric, p, 3);

  // C_ij as jets of order 1
  Mat3<Jet3d> C;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      C[i][j] = cj.ricci[i][j] -
                cj.chris.g[i][j].truncated(1) * cj.scalar * 0.25;

  WeylSchouten out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.C[i][j] = C[i][j].value();

  // nabla_i C_jk
  double nabla[3][3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        double s = C[j][k].deriv(i).value();
        for (int l = 0; l < 3; ++l)
          s -= cj.chris.gamma[l][i][j].value() * C[l][k].value() +
               cj.chris.gamma[l][i][k].value() * C[j][l].value();
        nabla[i][j][k] = s;
      }

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        out.grad[i][j][k] = 0.5 * (nabla[i][j][k] - nabla[j][i][k]);

  Mat3<double> ginv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) ginv[i][j] = cj.chris.ginv[i][j].value();
  double n2 = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
              n2 += ginv[i][a] * ginv[j][b] * ginv[k][c] * out.grad[i][j][k] *
                    out.grad[a][b][c];
  out.norm = std::sqrt(std::abs(n2));
  return out;
}

std::pair<double, double> cotton_components_sasakian(const SasakianStructure& s,
                                                     Point2 p) {
  const double R = scalar_curvature_tw(s.P0(), p);
  return {2.0 - 0.25 * R, 0.25 * R - 1.0};
}

CottonReport conformal_flatness_check(const SasakianStructure& s,
                                      std::span<const Point3> samples,
                                      double tol) {
  CottonReport rep;
  rep.tol = tol;
  const MetricPtr metric = s.metric();
  bool first = true;
  for (const Point3& p : samples) {
    const WeylSchouten ws = weyl_schouten(*metric, p);
    rep.max_norm = std::max(rep.max_norm, ws.norm);
    const auto [c00, cpm] = cotton_components_sasakian(s, {p.u, p.v});
    if (first) {
      rep.C00 = c00;
      rep.Cpm = cpm;
      first = false;
    }
    rep.c00_half_dev = std::max(rep.c00_half_dev, std::abs(c00 - 0.5));
    rep.cpm_half_dev = std::max(rep.cpm_half_dev, std::abs(cpm - 0.5));
  }
  rep.flat = rep.max_norm <= tol;
  rep.einstein_signature = rep.c00_half_dev <= 1e-6 && rep.cpm_half_dev <= 1e-6;
  return rep;
}

}  // namespace sasaki
