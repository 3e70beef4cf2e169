#include "sasaki/triad.hpp"

#include <cmath>

namespace sasaki {

Triad cartesian_triad() {
  return Triad([](const Point3&, int order) {
    TriadJets t;
    for (int i = 0; i < 3; ++i) {
      t.e0[i] = Jet3d::constant(i == 0 ? 1.0 : 0.0, order);
      t.e1[i] = Jet3d::constant(i == 1 ? 1.0 : 0.0, order);
      t.e2[i] = Jet3d::constant(i == 2 ? 1.0 : 0.0, order);
    }
    t.phase_rotated = false;
    return t;
  });
}

ComplexFrameJets complex_frame(const TriadJets& t, const Point3& p, int order) {
  using C = std::complex<double>;
  ComplexFrameJets f;
  const C inv_sqrt2(1.0 / std::sqrt(2.0), 0.0);
  const C minus_i(0.0, -1.0);

  CJet3 phase = CJet3::constant(C(1.0, 0.0), order);
  if (t.phase_rotated) {
    const CJet3 r = complexify(Jet3d::variable(p.r, 0, order));
    phase = exp(r * minus_i);
  }
  for (int i = 0; i < 3; ++i) {
    f.e0[i] = complexify(t.e0[i]);
    f.ep[i] = phase * (complexify(t.e1[i]) + complexify(t.e2[i]) * minus_i) *
              inv_sqrt2;
    f.em[i] = conj(f.ep[i]);
  }
  return f;
}

double orthonormality_residual(const MetricEvaluator& metric, const Triad& triad,
                               const Point3& p) {
  const MetricJets g = metric.components(p, 0);
  const TriadJets t = triad.jets(p, 0);
  const Vec3<Jet3d>* e[3] = {&t.e0, &t.e1, &t.e2};
  double res = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) {
      double s = 0.0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          s += g[i][j].value() * (*e[a])[i].value() * (*e[b])[j].value();
      res = std::max(res, std::abs(s - (a == b ? 1.0 : 0.0)));
    }
  return res;
}

}  // namespace sasaki
