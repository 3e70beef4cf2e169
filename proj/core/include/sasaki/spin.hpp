#pragma once

// Newman-Penrose-Perjes spin-coefficient formalism for riemannian
// 3-manifolds: the five complex connection scalars
//
//   rho = gamma_{+0-}   sigma = gamma_{+0+}   tau = gamma_{+--}
//   kappa = gamma_{+00} epsilon = gamma_{+-0}
//
// with gamma_{mnp} = (nabla_{e_p} e_m)_i e_n^i, the directional operators
// D = e0^i d_i, delta = e+^i d_i, deltabar = e-^i d_i, and the curvature
// quantities expressed through them.  This is the library's second,
// independent curvature route.

#include <complex>
#include <utility>

#include "sasaki/curvature.hpp"
#include "sasaki/triad.hpp"

namespace sasaki {

using Complex = std::complex<double>;

struct SpinCoefficients {
  Complex kappa, sigma, rho, tau, epsilon;
};

struct SpinJets {
  CJet3 kappa, sigma, rho, tau, epsilon;
};

// Scalar field over (r,u,v) with jets, complex valued.
using ComplexField3 = std::function<CJet3(const Point3&, int order)>;

// Jets of the five coefficients to `order` (<= 2; each order consumes one
// derivative of the frame and metric).  Checks frame orthonormality (throws
// FrameError) and the antisymmetry gamma_{mnp} = -gamma_{nmp} to 1e-10.
SpinJets spin_coefficient_jets(const MetricEvaluator& metric, const Triad& triad,
                               const Point3& p, int order);

SpinCoefficients spin_coefficients(const MetricEvaluator& metric,
                                   const Triad& triad, const Point3& p);

struct DirectionalDerivatives {
  Complex D, delta, deltabar;
};

// (D f, delta f, deltabar f); for real f, deltabar f = conj(delta f).
DirectionalDerivatives directional_derivatives(const Triad& triad,
                                               const ComplexField3& f,
                                               const Point3& p);

// Residuals of the two commutator relations
//   (D delta - delta D) f    = [(conj rho + eps) delta + sigma deltabar + kappa D] f
//   (delta deltabar - deltabar delta) f
//                            = [conj tau deltabar - tau delta + (conj rho - rho) D] f
// for a function f with second derivatives.  Zero for any torsion-free
// consistent frame.
std::pair<Complex, Complex> commutator_residual(const MetricEvaluator& metric,
                                                const Triad& triad,
                                                const SpinCoefficients& spin,
                                                const ComplexField3& f,
                                                const Point3& p);

struct RicciSpin {
  Complex R00, Rpp, R0p, R0m, Rpm;
  double scalar = 0.0;
};

// Ricci components on the complex frame computed purely from spin
// coefficients and their directional derivatives.
RicciSpin ricci_from_spin(const MetricEvaluator& metric, const Triad& triad,
                          const Point3& p);

// Residuals of the two first-order identities that follow from the
// symmetries of the curvature tensor; <= tolerance for any metric/frame.
std::pair<Complex, Complex> curvature_identity_residual(
    const MetricEvaluator& metric, const Triad& triad, const Point3& p);

// Residuals of the two Bianchi identities written in terms of the Einstein
// tensor components E_mn = R_mn - R/2 g_mn on the complex frame.
std::pair<Complex, Complex> bianchi_residual(const MetricEvaluator& metric,
                                             const Triad& triad, const Point3& p);

// Frame projections R_mn = R_ij e_m^i e_n^j of the tensor-route Ricci;
// the cross-check target for ricci_from_spin.
RicciSpin ricci_frame_projection(const MetricEvaluator& metric,
                                 const Triad& triad, const Point3& p);

// Lift a real (u,v) field to a complex field over (r,u,v).
ComplexField3 lift_field(const ScalarJetField& f);

}  // namespace sasaki
