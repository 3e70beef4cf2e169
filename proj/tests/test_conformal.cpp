#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sasaki/conformal.hpp"
#include "test_support.hpp"

using namespace sasaki;
using namespace testsupport;

TEST_CASE("flat space: both the tensor and its derivative vanish") {
  EuclideanMetric m;
  const WeylSchouten ws = weyl_schouten(m, {0.1, 0.4, -0.3});
  CHECK(ws.norm == 0.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(ws.C[i][j] == 0.0);
}

TEST_CASE("round family: conformally flat with the einstein signature") {
  const SasakianStructure s = family_structure(2.0);
  const auto pts = random_points(Rect{-1.5, 1.5, -1.5, 1.5}, 25, 3);
  const CottonReport rep = conformal_flatness_check(s, pts, 1e-5);
  CHECK(rep.flat);
  CHECK(rep.max_norm < 1e-5);
  CHECK(rep.C00 == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(rep.Cpm == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(rep.einstein_signature);
}

TEST_CASE("nil: not conformally flat, with the expected component values") {
  const SasakianStructure nil = nil_structure();
  const auto pts = random_points(nil.domain(), 20, 5);
  const CottonReport rep = conformal_flatness_check(nil, pts, 1e-5);
  CHECK_FALSE(rep.flat);
  CHECK(rep.max_norm > 0.1);
  CHECK(rep.C00 == doctest::Approx(2.5));
  CHECK(rep.Cpm == doctest::Approx(-1.5));
  CHECK_FALSE(rep.einstein_signature);
}

TEST_CASE("component values across the curvature range") {
  // R = 2 gives (1.5, -0.5); R = -10 (W = -2) gives (4.5, -3.5)
  const auto c1 = cotton_components_sasakian(family_structure(1.0), {0.4, -0.2});
  CHECK(c1.first == doctest::Approx(1.5).epsilon(1e-9));
  CHECK(c1.second == doctest::Approx(-0.5).epsilon(1e-9));

  const auto cm2 = cotton_components_sasakian(family_structure(-2.0), {0.3, 0.1});
  CHECK(cm2.first == doctest::Approx(4.5).epsilon(1e-9));
  CHECK(cm2.second == doctest::Approx(-3.5).epsilon(1e-9));
}

TEST_CASE("route equivalence: component formulas vs tensor projections") {
  for (const double W : {2.0, 0.0, -2.0, 1.0}) {
    CAPTURE(W);
    const SasakianStructure s = family_structure(W);
    const Triad triad = s.adapted_triad();
    const Rect inner = W < 0.0 ? Rect{-0.55, 0.55, -0.55, 0.55}
                               : Rect{-1.5, 1.5, -1.5, 1.5};
    for (const Point3& p : random_points(inner, 15, 11)) {
      const auto [c00, cpm] = cotton_components_sasakian(s, {p.u, p.v});
      const WeylSchouten ws = weyl_schouten(*s.metric(), p);
      const TriadJets t = triad.jets(p, 0);
      const ComplexFrameJets fr = complex_frame(t, p, 0);
      std::complex<double> c00_t = 0.0, cpm_t = 0.0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          c00_t += ws.C[i][j] * fr.e0[i].value() * fr.e0[j].value();
          cpm_t += ws.C[i][j] * fr.ep[i].value() * fr.em[j].value();
        }
      CHECK(cabs(c00_t - c00) < 1e-6);
      CHECK(cabs(cpm_t - cpm) < 1e-6);
    }
  }
}

TEST_CASE("dichotomy across the W grid: flat exactly at W = 2") {
  for (const double W : {-3.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0}) {
    CAPTURE(W);
    const SasakianStructure s = family_structure(W);
    const Rect inner = W < 0.0 ? Rect{-0.55, 0.55, -0.55, 0.55}
                               : Rect{-1.0, 1.0, -1.0, 1.0};
    const auto pts = random_points(inner, 8, 13);
    const CottonReport rep = conformal_flatness_check(s, pts, 1e-5);
    if (W == 2.0) {
      CHECK(rep.flat);
    } else {
      CHECK_FALSE(rep.flat);
      CHECK(rep.max_norm > 0.1);
    }
  }
}

TEST_CASE("antisymmetry and tracelessness of the derivative tensor") {
  const SasakianStructure nil = nil_structure();
  const Point3 p{0.3, 0.4, -0.6};
  const WeylSchouten ws = weyl_schouten(*nil.metric(), p);
  const Mat3<double> ginv = inverse(metric_values(*nil.metric(), p));

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        CHECK(std::abs(ws.grad[i][j][k] + ws.grad[j][i][k]) < 1e-12);

  // both traces with the inverse metric vanish
  for (int i = 0; i < 3; ++i) {
    double tjk = 0.0, tik = 0.0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        tjk += ginv[a][b] * ws.grad[i][a][b];
        tik += ginv[a][b] * ws.grad[a][i][b];
      }
    CHECK(std::abs(tjk) < 1e-8);
    CHECK(std::abs(tik) < 1e-8);
  }
}

TEST_CASE("metrics without third derivatives are rejected") {
  FunctionMetric capped(
      [](const Point3&, int order) {
        MetricJets g;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            g[i][j] = Jet3d::constant(i == j ? 1.0 : 0.0, order);
        return g;
      },
      /*max_order=*/2);
  CHECK_THROWS_AS(weyl_schouten(capped, {0.0, 0.0, 0.0}), CapabilityError);
}
