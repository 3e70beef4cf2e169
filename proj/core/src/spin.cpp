#include "sasaki/spin.hpp"

#include <cmath>

#include "sasaki/errors.hpp"

namespace sasaki {

namespace {

// Directional derivative of a jet field along a jet-carrying vector.
CJet3 dir(const Vec3<CJet3>& e, const CJet3& f) {
  return e[0] * f.deriv(0) + e[1] * f.deriv(1) + e[2] * f.deriv(2);
}

struct FrameSetup {
  ComplexFrameJets fr;
  ChristoffelJets chris;
};

FrameSetup make_frame(const MetricEvaluator& metric, const Triad& triad,
                      const Point3& p, int gamma_order) {
  if (orthonormality_residual(metric, triad, p) > 1e-10)
    throw FrameError("triad is not orthonormal at the evaluation point");
  FrameSetup s;
  const TriadJets t = triad.jets(p, gamma_order + 1);
  s.fr = complex_frame(t, p, gamma_order + 1);
  s.chris = christoffel_jets(metric, p, gamma_order);
  return s;
}

// (nabla_{e_p} e_m)^i as jets.
Vec3<CJet3> covariant_dir(const FrameSetup& s, const Vec3<CJet3>& ep,
                          const Vec3<CJet3>& em) {
  Vec3<CJet3> out;
  for (int i = 0; i < 3; ++i) {
    CJet3 acc = dir(ep, em[i]);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        acc = acc + ep[j] * complexify(s.chris.gamma[i][j][k]) * em[k];
    out[i] = acc;
  }
  return out;
}

// gamma_{mnp} = g_il (nabla_{e_p} e_m)^l e_n^i, bilinear in everything.
CJet3 gamma_of(const FrameSetup& s, const Vec3<CJet3>& nabla_em,
               const Vec3<CJet3>& en) {
  CJet3 acc = CJet3::constant({}, nabla_em[0].order());
  for (int i = 0; i < 3; ++i)
    for (int l = 0; l < 3; ++l)
      acc = acc + complexify(s.chris.g[i][l]) * nabla_em[l] * en[i];
  return acc;
}

struct RicciSpinJets {
  CJet3 R00, Rpp, R0p, R0m, Rpm, halfR;
};

SpinJets spin_jets_from(const FrameSetup& s, int order) {
  const Vec3<CJet3> grad_ep_0 = covariant_dir(s, s.fr.e0, s.fr.ep);
  const Vec3<CJet3> grad_ep_p = covariant_dir(s, s.fr.ep, s.fr.ep);
  const Vec3<CJet3> grad_ep_m = covariant_dir(s, s.fr.em, s.fr.ep);

  SpinJets out;
  out.kappa = gamma_of(s, grad_ep_0, s.fr.e0).truncated(order);    // gamma_{+00}
  out.sigma = gamma_of(s, grad_ep_p, s.fr.e0).truncated(order);    // gamma_{+0+}
  out.rho = gamma_of(s, grad_ep_m, s.fr.e0).truncated(order);      // gamma_{+0-}
  out.tau = gamma_of(s, grad_ep_m, s.fr.em).truncated(order);      // gamma_{+--}
  out.epsilon = gamma_of(s, grad_ep_0, s.fr.em).truncated(order);  // gamma_{+-0}

  // Antisymmetry gamma_{mnp} = -gamma_{nmp}: diagonals vanish, and the
  // (0,+) entries are the negatives of the (+,0) ones.
  const Vec3<CJet3> grad_e0_0 = covariant_dir(s, s.fr.e0, s.fr.e0);
  const Vec3<CJet3> grad_e0_p = covariant_dir(s, s.fr.ep, s.fr.e0);
  const Vec3<CJet3> grad_e0_m = covariant_dir(s, s.fr.em, s.fr.e0);
  const double asym = std::max(
      {std::abs(gamma_of(s, grad_e0_0, s.fr.ep).value() + out.kappa.value()),
       std::abs(gamma_of(s, grad_e0_p, s.fr.ep).value() + out.sigma.value()),
       std::abs(gamma_of(s, grad_e0_m, s.fr.ep).value() + out.rho.value()),
       std::abs(gamma_of(s, grad_ep_0, s.fr.ep).value()),
       std::abs(gamma_of(s, grad_e0_0, s.fr.e0).value())});
  if (asym > 1e-10)
    throw FrameError("spin-coefficient antisymmetry violated");
  return out;
}

RicciSpinJets ricci_spin_jets(const MetricEvaluator& metric, const Triad& triad,
                              const Point3& p, int out_order) {
  const FrameSetup s = make_frame(metric, triad, p, out_order + 1);
  const SpinJets sc = spin_jets_from(s, out_order + 1);

  const CJet3 kappa = sc.kappa, sigma = sc.sigma, rho = sc.rho, tau = sc.tau,
              eps = sc.epsilon;
  const CJet3 kappab = conj(kappa), sigmab = conj(sigma), rhob = conj(rho),
              taub = conj(tau);

  const auto D = [&](const CJet3& f) { return dir(s.fr.e0, f); };
  const auto del = [&](const CJet3& f) { return dir(s.fr.ep, f); };
  const auto delb = [&](const CJet3& f) { return dir(s.fr.em, f); };

  RicciSpinJets r;
  r.R00 = D(rho) + D(rhob) - delb(kappa) - del(kappab) + tau * kappa +
          taub * kappab - 2.0 * (kappa * kappab) - 2.0 * (sigma * sigmab) -
          rho * rho - rhob * rhob;
  r.Rpp = -del(kappa) + D(sigma) - 2.0 * (eps * sigma) - taub * kappa -
          kappa * kappa - sigma * rhob - rho * sigma;
  r.R0p = -delb(sigma) + del(rho) + 2.0 * (tau * sigma) + kappa * rho -
          kappa * rhob;
  r.R0m = -delb(eps) + D(tau) + kappa * sigmab - rho * kappab + eps * tau -
          eps * kappab + taub * sigmab - tau * rho;
  r.Rpm = -delb(kappa) + D(rho) + del(tau) + delb(taub) + eps * rho -
          eps * rhob - kappa * kappab + kappa * tau - rho * rhob - rho * rho -
          2.0 * (tau * taub);
  r.halfR = -2.0 * del(kappab) + 2.0 * D(rhob) + del(tau) + delb(taub) -
            2.0 * (kappa * kappab) + 2.0 * (kappab * taub) -
            2.0 * (rhob * rhob) - sigma * sigmab + eps * rho - eps * rhob -
            rho * rhob - 2.0 * (tau * taub);
  return r;
}

}  // namespace

SpinJets spin_coefficient_jets(const MetricEvaluator& metric, const Triad& triad,
                               const Point3& p, int order) {
  const FrameSetup s = make_frame(metric, triad, p, order);
  return spin_jets_from(s, order);
}

SpinCoefficients spin_coefficients(const MetricEvaluator& metric,
                                   const Triad& triad, const Point3& p) {
  const SpinJets j = spin_coefficient_jets(metric, triad, p, 0);
  return {j.kappa.value(), j.sigma.value(), j.rho.value(), j.tau.value(),
          j.epsilon.value()};
}

DirectionalDerivatives directional_derivatives(const Triad& triad,
                                               const ComplexField3& f,
                                               const Point3& p) {
  const TriadJets t = triad.jets(p, 1);
  const ComplexFrameJets fr = complex_frame(t, p, 1);
  const CJet3 fj = f(p, 1);
  return {dir(fr.e0, fj).value(), dir(fr.ep, fj).value(),
          dir(fr.em, fj).value()};
}

std::pair<Complex, Complex> commutator_residual(const MetricEvaluator& metric,
                                                const Triad& triad,
                                                const SpinCoefficients& spin,
                                                const ComplexField3& f,
                                                const Point3& p) {
  if (orthonormality_residual(metric, triad, p) > 1e-10)
    throw FrameError("triad is not orthonormal at the evaluation point");
  const TriadJets t = triad.jets(p, 2);
  const ComplexFrameJets fr = complex_frame(t, p, 2);
  const CJet3 fj = f(p, 2);

  const CJet3 Df = dir(fr.e0, fj);
  const CJet3 delf = dir(fr.ep, fj);
  const CJet3 delbf = dir(fr.em, fj);

  const Complex DdeltaF = dir(fr.e0, delf).value();
  const Complex deltaDF = dir(fr.ep, Df).value();
  const Complex deldelb = dir(fr.ep, delbf).value();
  const Complex delbdel = dir(fr.em, delf).value();

  const Complex rb = std::conj(spin.rho), tb = std::conj(spin.tau);
  const Complex c1 = (DdeltaF - deltaDF) -
                     ((rb + spin.epsilon) * delf.value() +
                      spin.sigma * delbf.value() + spin.kappa * Df.value());
  const Complex c2 =
      (deldelb - delbdel) - (tb * delbf.value() - spin.tau * delf.value() +
                             (rb - spin.rho) * Df.value());
  return {c1, c2};
}

RicciSpin ricci_from_spin(const MetricEvaluator& metric, const Triad& triad,
                          const Point3& p) {
  const RicciSpinJets r = ricci_spin_jets(metric, triad, p, 0);
  return {r.R00.value(), r.Rpp.value(), r.R0p.value(), r.R0m.value(),
          r.Rpm.value(), 2.0 * r.halfR.value().real()};
}

std::pair<Complex, Complex> curvature_identity_residual(
    const MetricEvaluator& metric, const Triad& triad, const Point3& p) {
  const FrameSetup s = make_frame(metric, triad, p, 1);
  const SpinJets sc = spin_jets_from(s, 1);

  const auto D = [&](const CJet3& f) { return dir(s.fr.e0, f).value(); };
  const auto del = [&](const CJet3& f) { return dir(s.fr.ep, f).value(); };
  const auto delb = [&](const CJet3& f) { return dir(s.fr.em, f).value(); };

  const Complex kappa = sc.kappa.value(), sigma = sc.sigma.value(),
                rho = sc.rho.value(), tau = sc.tau.value(),
                eps = sc.epsilon.value();
  const Complex kb = std::conj(kappa), sb = std::conj(sigma),
                rb = std::conj(rho), tb = std::conj(tau);

  const Complex id1 = (D(sc.rho) - delb(sc.kappa) + kappa * tau - rho * rho) -
                      (D(conj(sc.rho)) - del(conj(sc.kappa)) + kb * tb - rb * rb);
  const Complex id2 =
      (del(conj(sc.sigma)) - delb(conj(sc.rho)) - tb * sb - kb * rb) -
      (delb(sc.epsilon) - D(sc.tau) - kappa * sb - eps * tau + eps * kb +
       tau * rho);
  return {id1, id2};
}

std::pair<Complex, Complex> bianchi_residual(const MetricEvaluator& metric,
                                             const Triad& triad,
                                             const Point3& p) {
  const RicciSpinJets r = ricci_spin_jets(metric, triad, p, 1);
  const FrameSetup s = make_frame(metric, triad, p, 1);
  const SpinJets sc = spin_jets_from(s, 1);

  // frame inner products as jets (constant to jet order for orthonormal
  // frames, but computed honestly)
  const auto inner = [&](const Vec3<CJet3>& a, const Vec3<CJet3>& b) {
    CJet3 acc = CJet3::constant({}, 1);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        acc = acc + complexify(s.chris.g[i][j]) * a[i] * b[j];
    return acc;
  };
  const CJet3 g00 = inner(s.fr.e0, s.fr.e0);
  const CJet3 g0p = inner(s.fr.e0, s.fr.ep);
  const CJet3 gpp = inner(s.fr.ep, s.fr.ep);
  const CJet3 gpm = inner(s.fr.ep, s.fr.em);

  const CJet3 E00 = r.R00 - r.halfR * g00;
  const CJet3 E0p = r.R0p - r.halfR * g0p;
  const CJet3 E0m = r.R0m - r.halfR * conj(g0p);
  const CJet3 Epp = r.Rpp - r.halfR * gpp;
  const CJet3 Emm = conj(Epp);
  const CJet3 Epm = r.Rpm - r.halfR * gpm;

  const auto D = [&](const CJet3& f) { return dir(s.fr.e0, f).value(); };
  const auto del = [&](const CJet3& f) { return dir(s.fr.ep, f).value(); };
  const auto delb = [&](const CJet3& f) { return dir(s.fr.em, f).value(); };

  const Complex kappa = sc.kappa.value(), sigma = sc.sigma.value(),
                rho = sc.rho.value(), tau = sc.tau.value(),
                eps = sc.epsilon.value();
  const Complex kb = std::conj(kappa), sb = std::conj(sigma),
                rb = std::conj(rho), tb = std::conj(tau);

  const Complex b1 = D(E00) + delb(E0p) + del(E0m) +
                     (rho + rb) * (Epm.value() - E00.value()) +
                     (2.0 * kb - tau) * E0p.value() +
                     (2.0 * kappa - tb) * E0m.value() + sb * Epp.value() +
                     sigma * Emm.value();
  const Complex b2 = D(E0p) + delb(Epp) + del(Epm) +
                     kappa * (Epm.value() - E00.value()) -
                     (eps + 2.0 * rho + rb) * E0p.value() -
                     sigma * E0m.value() + (kb - 2.0 * tau) * Epp.value();
  return {b1, b2};
}

RicciSpin ricci_frame_projection(const MetricEvaluator& metric,
                                 const Triad& triad, const Point3& p) {
  const TriadJets t = triad.jets(p, 0);
  const ComplexFrameJets fr = complex_frame(t, p, 0);
  const CurvatureJets cj = curvature_jets(metric, p, 2);

  const auto project = [&](const Vec3<CJet3>& a, const Vec3<CJet3>& b) {
    Complex acc = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        acc += cj.ricci[i][j].value() * a[i].value() * b[j].value();
    return acc;
  };
  RicciSpin out;
  out.R00 = project(fr.e0, fr.e0);
  out.Rpp = project(fr.ep, fr.ep);
  out.R0p = project(fr.e0, fr.ep);
  out.R0m = project(fr.e0, fr.em);
  out.Rpm = project(fr.ep, fr.em);
  out.scalar = cj.scalar.value();
  return out;
}

ComplexField3 lift_field(const ScalarJetField& f) {
  return [f](const Point3& p, int order) {
    return complexify(lift_uv(f.eval(p.u, p.v, order)));
  };
}

}  // namespace sasaki
