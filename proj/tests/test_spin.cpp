#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "sasaki/spin.hpp"
#include "test_support.hpp"

using namespace sasaki;
using namespace testsupport;
using C = std::complex<double>;

namespace {

ComplexField3 poly_field() {
  return [](const Point3& p, int order) {
    const CJet3 r = complexify(Jet3d::variable(p.r, 0, order));
    const CJet3 u = complexify(Jet3d::variable(p.u, 1, order));
    const CJet3 v = complexify(Jet3d::variable(p.v, 2, order));
    return u * v + r * u * 0.3 - v * v * 0.2;
  };
}

ComplexField3 uv_field() {
  return [](const Point3& p, int order) {
    const CJet3 u = complexify(Jet3d::variable(p.u, 1, order));
    const CJet3 v = complexify(Jet3d::variable(p.v, 2, order));
    return u * v;
  };
}

}  // namespace

TEST_CASE("cartesian frame on euclidean space: all five coefficients vanish") {
  EuclideanMetric m;
  const SpinCoefficients sc =
      spin_coefficients(m, cartesian_triad(), {0.4, -0.2, 0.9});
  CHECK(cabs(sc.kappa) < 1e-14);
  CHECK(cabs(sc.sigma) < 1e-14);
  CHECK(cabs(sc.rho) < 1e-14);
  CHECK(cabs(sc.tau) < 1e-14);
  CHECK(cabs(sc.epsilon) < 1e-14);
}

TEST_CASE("nil adapted frame: kappa = sigma = epsilon = 0 and rho = i") {
  const SasakianStructure s = nil_structure();
  const Triad tr = s.adapted_triad();
  for (const Point3& p : random_points(Rect{-1.5, 1.5, -1.5, 1.5}, 20, 17)) {
    const SpinCoefficients sc = spin_coefficients(*s.metric(), tr, p);
    CHECK(cabs(sc.kappa) < 1e-10);
    CHECK(cabs(sc.sigma) < 1e-10);
    CHECK(cabs(sc.epsilon) < 1e-10);
    CHECK(cabs(sc.rho - C(0.0, 1.0)) < 1e-10);
  }
}

TEST_CASE("tau of the adapted frame equals tau0 e^{ir} from the reduced data") {
  // nil: tau0 = i sqrt(2) v; round family at z = 0: tau0 = 0
  const SasakianStructure nil = nil_structure();
  const Triad tr = nil.adapted_triad();
  for (const Point3& p :
       {Point3{0.0, 0.4, 0.7}, Point3{1.2, -0.3, -0.9}, Point3{-0.5, 0.0, 1.3}}) {
    const SpinCoefficients sc = spin_coefficients(*nil.metric(), tr, p);
    const C tau0 = C(0.0, std::sqrt(2.0) * p.v);
    const C expected = tau0 * std::exp(C(0.0, p.r));
    CHECK(cabs(sc.tau - expected) < 1e-12);
  }

  const SasakianStructure round = family_structure(2.0);
  const SpinCoefficients sc0 =
      spin_coefficients(*round.metric(), round.adapted_triad(), {0.8, 0.0, 0.0});
  CHECK(cabs(sc0.tau) < 1e-10);

  // general consistency: spin-route tau against the jet-engine tau0 field
  const SasakianStructure s =
      build_normal_form(bumpy_p0(), Rect{-1.0, 1.0, -1.0, 1.0}, 0.0);
  const Triad str = s.adapted_triad();
  for (const Point3& p : random_points(Rect{-0.8, 0.8, -0.8, 0.8}, 10, 23)) {
    const SpinCoefficients sc = spin_coefficients(*s.metric(), str, p);
    const C tau0 = s.tau0_jet(p.u, p.v, 0).value();
    CHECK(cabs(sc.tau - tau0 * std::exp(C(0.0, p.r))) < 1e-9);
  }
}

TEST_CASE("directional derivatives") {
  EuclideanMetric m;
  const Triad tr = cartesian_triad();

  // constants annihilate
  const ComplexField3 cst = [](const Point3&, int order) {
    return CJet3::constant(C(2.5, -1.0), order);
  };
  const DirectionalDerivatives d0 =
      directional_derivatives(tr, cst, {0.1, 0.2, 0.3});
  CHECK(cabs(d0.D) == 0.0);
  CHECK(cabs(d0.delta) == 0.0);
  CHECK(cabs(d0.deltabar) == 0.0);

  // delta u = 1/sqrt(2) on the cartesian frame
  const ComplexField3 fu = [](const Point3& p, int order) {
    return complexify(Jet3d::variable(p.u, 1, order));
  };
  const DirectionalDerivatives du =
      directional_derivatives(tr, fu, {0.0, 0.0, 0.0});
  CHECK(cabs(du.delta - C(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
  CHECK(cabs(du.deltabar - std::conj(du.delta)) < 1e-15);
  CHECK(cabs(du.D) == 0.0);

  // conjugation convention on a genuinely complex field:
  // deltabar f = conj(delta conj(f))
  const ComplexField3 fc = [](const Point3& p, int order) {
    const CJet3 u = complexify(Jet3d::variable(p.u, 1, order));
    const CJet3 v = complexify(Jet3d::variable(p.v, 2, order));
    return u * v * C(0.4, 1.2) + v * C(0.0, -0.7);
  };
  const ComplexField3 fc_conj = [&fc](const Point3& p, int order) {
    return conj(fc(p, order));
  };
  const SasakianStructure nils = nil_structure();
  const Triad ntr = nils.adapted_triad();
  const Point3 q{0.3, -0.4, 0.8};
  const DirectionalDerivatives a = directional_derivatives(ntr, fc, q);
  const DirectionalDerivatives b = directional_derivatives(ntr, fc_conj, q);
  CHECK(cabs(a.deltabar - std::conj(b.delta)) < 1e-14);

  // scalar curvature of a normal form is constant along the congruence
  const SasakianStructure s =
      build_normal_form(bumpy_p0(), Rect{-1.0, 1.0, -1.0, 1.0}, 0.0);
  const ComplexField3 Rf = lift_field(ScalarJetField(
      [&s](double u, double v, int order) {
        // order-1 jets of the two-route scalar curvature
        const Jet2d p0 = s.P0().eval(u, v, 3);
        const Jet2d lnp = log(abs(p0));
        const Jet2d lap = lnp.deriv(0).deriv(0) + lnp.deriv(1).deriv(1);
        return (4.0 * (p0 * p0).truncated(order) * lap - 2.0).truncated(order);
      }));
  const DirectionalDerivatives dR =
      directional_derivatives(s.adapted_triad(), Rf, {0.7, 0.3, -0.2});
  CHECK(cabs(dR.D) == 0.0);  // r-independence is structural
}

TEST_CASE("commutator residuals vanish for consistent frames") {
  EuclideanMetric m;
  const Triad cart = cartesian_triad();
  const SpinCoefficients zero{};
  const auto [e1, e2] =
      commutator_residual(m, cart, zero, poly_field(), {0.3, 0.5, -0.4});
  CHECK(cabs(e1) < 1e-13);
  CHECK(cabs(e2) < 1e-13);

  const SasakianStructure nil = nil_structure();
  const Triad tr = nil.adapted_triad();
  for (const Point3& p : random_points(Rect{-1.0, 1.0, -1.0, 1.0}, 10, 31)) {
    const SpinCoefficients sc = spin_coefficients(*nil.metric(), tr, p);
    const auto [c1, c2] = commutator_residual(*nil.metric(), tr, sc, uv_field(), p);
    CHECK(cabs(c1) < 1e-6);
    CHECK(cabs(c2) < 1e-6);
  }
}

TEST_CASE("corrupted shear breaks the first commutator (negative control)") {
  const SasakianStructure nil = nil_structure();
  const Triad tr = nil.adapted_triad();
  const Point3 p{0.2, 0.4, 0.6};
  SpinCoefficients sc = spin_coefficients(*nil.metric(), tr, p);
  sc.sigma += 0.1;
  const auto [c1, c2] = commutator_residual(*nil.metric(), tr, sc, uv_field(), p);
  CHECK(cabs(c1) > 1e-3);
  (void)c2;
}

TEST_CASE("ricci from spin coefficients: closed-form components") {
  EuclideanMetric m;
  const RicciSpin flat = ricci_from_spin(m, cartesian_triad(), {0.1, 0.2, 0.3});
  CHECK(cabs(flat.R00) < 1e-13);
  CHECK(cabs(flat.Rpp) < 1e-13);
  CHECK(cabs(flat.R0p) < 1e-13);
  CHECK(cabs(flat.R0m) < 1e-13);
  CHECK(cabs(flat.Rpm) < 1e-13);
  CHECK(std::abs(flat.scalar) < 1e-13);

  for (const double W : {2.0, 0.0, -2.0}) {
    const SasakianStructure s = family_structure(W);
    const RicciSpin r =
        ricci_from_spin(*s.metric(), s.adapted_triad(), {0.4, 0.2, -0.1});
    CHECK(cabs(r.R00 - 2.0) < 1e-9);
    CHECK(cabs(r.Rpp) < 1e-9);
    CHECK(cabs(r.R0p) < 1e-9);
    CHECK(std::abs(r.scalar - (4.0 * W - 2.0)) < 1e-8);
  }

  const SasakianStructure nil = nil_structure();
  const RicciSpin rn =
      ricci_from_spin(*nil.metric(), nil.adapted_triad(), {0.0, 0.5, 0.5});
  const RicciSpin proj =
      ricci_frame_projection(*nil.metric(), nil.adapted_triad(), {0.0, 0.5, 0.5});
  CHECK(cabs(rn.Rpm - C(-2.0, 0.0)) < 1e-10);
  CHECK(cabs(rn.Rpm - proj.Rpm) < 1e-10);
}

TEST_CASE("route equivalence on all three families at 100 random points") {
  for (const double W : {2.0, 0.0, -2.0}) {
    const SasakianStructure s = family_structure(W);
    const Triad tr = s.adapted_triad();
    const Rect inner = W < 0.0 ? Rect{-0.6, 0.6, -0.6, 0.6}
                               : Rect{-2.0, 2.0, -2.0, 2.0};
    for (const Point3& p : random_points(inner, 100, 41)) {
      const RicciSpin a = ricci_from_spin(*s.metric(), tr, p);
      const RicciSpin b = ricci_frame_projection(*s.metric(), tr, p);
      CHECK(cabs(a.R00 - b.R00) < 1e-6);
      CHECK(cabs(a.Rpp - b.Rpp) < 1e-6);
      CHECK(cabs(a.R0p - b.R0p) < 1e-6);
      CHECK(cabs(a.R0m - b.R0m) < 1e-6);
      CHECK(cabs(a.Rpm - b.Rpm) < 1e-6);
      CHECK(std::abs(a.scalar - b.scalar) < 1e-6);
    }
  }
}

TEST_CASE("curvature identities hold for any metric and frame") {
  EuclideanMetric m;
  const auto [f1, f2] =
      curvature_identity_residual(m, cartesian_triad(), {0.0, 0.1, 0.2});
  CHECK(cabs(f1) < 1e-13);
  CHECK(cabs(f2) < 1e-13);

  for (const double W : {0.0, -2.0}) {
    const SasakianStructure s = family_structure(W);
    const Rect inner{-0.6, 0.6, -0.6, 0.6};
    for (const Point3& p : random_points(inner, 15, 53)) {
      const auto [i1, i2] =
          curvature_identity_residual(*s.metric(), s.adapted_triad(), p);
      CHECK(cabs(i1) < 1e-6);
      CHECK(cabs(i2) < 1e-6);
    }
  }
}

TEST_CASE("bianchi identities in spin-coefficient form") {
  EuclideanMetric m;
  const auto [e1, e2] = bianchi_residual(m, cartesian_triad(), {0.0, 0.1, 0.2});
  CHECK(cabs(e1) < 1e-13);
  CHECK(cabs(e2) < 1e-13);

  const SasakianStructure round = family_structure(2.0);
  for (const Point3& p : random_points(Rect{-1.5, 1.5, -1.5, 1.5}, 15, 61)) {
    const auto [b1, b2] =
        bianchi_residual(*round.metric(), round.adapted_triad(), p);
    CHECK(cabs(b1) < 1e-5);
    CHECK(cabs(b2) < 1e-5);
  }
}

TEST_CASE("sasakian reduction of the first bianchi identity: D(R scan) = 0") {
  // on any structure, delta tau + conj(delta tau) - 2 tau conj(tau)
  // determines the scalar curvature, and its D-derivative vanishes
  const SasakianStructure s =
      build_normal_form(bumpy_p0(), Rect{-1.0, 1.0, -1.0, 1.0}, 0.0);
  const Triad tr = s.adapted_triad();
  for (const Point3& p : random_points(Rect{-0.8, 0.8, -0.8, 0.8}, 8, 71)) {
    const TriadJets tj = tr.jets(p, 3);
    const ComplexFrameJets fr = complex_frame(tj, p, 3);
    const SpinJets sj = spin_coefficient_jets(*s.metric(), tr, p, 2);

    const auto dirjet = [&](const Vec3<CJet3>& e, const CJet3& f) {
      return e[0] * f.deriv(0) + e[1] * f.deriv(1) + e[2] * f.deriv(2);
    };
    const CJet3 scan = dirjet(fr.ep, sj.tau) + dirjet(fr.em, conj(sj.tau)) -
                       2.0 * (sj.tau * conj(sj.tau));
    const C d_scan = dirjet(fr.e0, scan).value();
    CHECK(cabs(d_scan) < 1e-9);
  }
}

TEST_CASE("non-orthonormal triads are rejected") {
  EuclideanMetric m;
  const Triad bad([](const Point3&, int order) {
    TriadJets t;
    for (int i = 0; i < 3; ++i) {
      t.e0[i] = Jet3d::constant(i == 0 ? 1.0 : 0.0, order);
      t.e1[i] = Jet3d::constant(i == 1 ? 1.1 : 0.0, order);  // stretched
      t.e2[i] = Jet3d::constant(i == 2 ? 1.0 : 0.0, order);
    }
    return t;
  });
  CHECK_THROWS_AS(spin_coefficients(m, bad, {0.0, 0.0, 0.0}), FrameError);
}
