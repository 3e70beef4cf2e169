#pragma once

// The local normal form of a Sasakian 3-manifold:
//
//   ds^2 = [dr + A du]^2 + (du^2 + dv^2) / (2 P0^2),   A(u,v) = int_{v0}^{v} P0^{-2} ds,
//
// for an arbitrary nowhere-zero generating function P0(u,v).  This module
// builds the structure, its contact form eta = dr + A du and Reeb field
// d/dr, the adapted orthonormal frame, the reduced data (Omega0, tau0) and
// the reduced first-order system they satisfy, plus verification of the
// Sasakian characterization and the contact-isometry criterion.

#include <complex>
#include <span>
#include <vector>

#include "sasaki/curvature.hpp"
#include "sasaki/field.hpp"
#include "sasaki/quadrature.hpp"
#include "sasaki/triad.hpp"

namespace sasaki {

// Jet of A(u,v) = int_{v0}^v P0^{-2}(u,s) ds.  Pure-u derivatives are
// integrated under the integral sign; every coefficient with a v-derivative
// follows from the fundamental theorem of calculus, so dA/dv = P0^{-2}
// holds exactly.
Jet2d integral_A(const ScalarJetField& P0, double u, double v, double v0,
                 int order, const QuadratureOptions& quad = {});

// Omega0 = -P0 * A, the r-independent part of the frame component along
// d/dr, in the gauge where the free function of integration is zero.
// Satisfies P0^2 d/dv (Omega0/P0) = -1.
double omega0(const ScalarJetField& P0, double u, double v, double v0,
              const QuadratureOptions& quad = {});

// tau0 = 2 dP0/dz - i Omega0 (the reduced torsion relation solved for tau0,
// valid in the real-Omega0 gauge).
std::complex<double> compute_tau0(const ScalarJetField& P0,
                                  const ScalarJetField& Omega0, Point2 p);

// Scalar curvature from the generating function alone:
//   R = 16 P0^2 d^2 ln P0 / dz dzbar - 2 = 4 P0^2 Laplacian(ln P0) - 2.
double scalar_curvature_tw(const ScalarJetField& P0, Point2 p);

// W = (R + 2) / 4.
inline double tanaka_webster(double R) { return 0.25 * (R + 2.0); }

struct ReducedResiduals {
  double first;  // curvature equation
  std::complex<double> second;  // divergence/twist equation
  std::complex<double> third;   // torsion relation
};

// Residuals of the reduced first-order system linking P0, Omega0, tau0 and
// the scalar curvature R; all three vanish on data from a genuine structure.
ReducedResiduals reduced_system_residual(const ScalarJetField& P0,
                                         const ScalarJetField& Omega0,
                                         const ComplexJetField& tau0,
                                         const ScalarJetField& R, Point2 p);

class SasakianStructure {
public:
  const ScalarJetField& P0() const { return p0_; }
  double v0() const { return v0_; }
  const Rect& domain() const { return domain_; }
  const QuadratureOptions& quadrature() const { return quad_; }

  Jet2d A(double u, double v, int order) const;
  Jet2d omega0_jet(double u, double v, int order) const;  // order <= 3
  CJet2 tau0_jet(double u, double v, int order) const;    // order <= 2

  // Contact form eta = dr + A du as a coordinate covector.
  Vec3<double> eta(double u, double v) const;
  Vec3<double> reeb() const { return {1.0, 0.0, 0.0}; }

  MetricPtr metric() const { return metric_; }

  // Orthonormal frame dual to (dr + A du, du/(sqrt2 P0), -dv/(sqrt2 P0)),
  // phase-rotated so that the spin coefficients come out kappa = sigma =
  // epsilon = 0 and rho = +i.
  Triad adapted_triad() const;

  ScalarJetField omega0_field() const;
  ComplexJetField tau0_field() const;
  ScalarJetField scalar_curvature_field() const;

  double scalar_curvature_tw(double u, double v) const;

private:
  friend SasakianStructure build_normal_form(ScalarJetField, Rect, double,
                                             QuadratureOptions);
  SasakianStructure() = default;

  ScalarJetField p0_;
  double v0_ = 0.0;
  Rect domain_;
  QuadratureOptions quad_;
  MetricPtr metric_;
};

// Validates that P0 is nowhere zero on the domain (64x64 sign/threshold
// sampling; a heuristic, not a proof) and assembles the structure.
SasakianStructure build_normal_form(ScalarJetField P0, Rect domain, double v0,
                                    QuadratureOptions quad = {});

// The reduced data of a structure: the torsion tau0, the frame component
// Omega0 and the scalar curvature, as fields over (u,v).
struct ReducedData {
  ComplexJetField tau0;
  ScalarJetField omega0;
  ScalarJetField scalar_curvature;
};

inline ReducedData reduced_data(const SasakianStructure& s) {
  return {s.tau0_field(), s.omega0_field(), s.scalar_curvature_field()};
}

struct VerificationReport {
  double killing_max = 0.0;    // Killing equation of the Reeb field
  double kappa_max = 0.0;      // geodesy (kappa = 0 is the geodesic condition)
  double sigma_max = 0.0;      // shear
  double re_rho_max = 0.0;     // divergence
  double im_rho_dev_max = 0.0; // |Im rho - 1|, twist deviation from one
  double sas_eq_max = 0.0;     // curvature endomorphism condition
  double tol = 0.0;
  bool pass = false;
};

VerificationReport verify_sasakian(const MetricEvaluator& metric,
                                   const Triad& triad,
                                   std::span<const Point3> samples, double tol);

VerificationReport verify_sasakian(const SasakianStructure& s,
                                   std::span<const Point3> samples, double tol);

struct IsometryCheck {
  bool contact_isometric = false;
  double max_residual = 0.0;
};

// Criterion for two normal forms to be contact isometric under a holomorphic
// coordinate map z(w):  P0tilde^2(w) |dz/dw|^2 = P0^2(z(w)).  The map is
// supplied as real and imaginary part fields of w = u + iv; a Cauchy-Riemann
// residual above 1e-10 at any sample raises PreconditionError.
IsometryCheck contact_isometry_check(const ScalarJetField& P0,
                                     const ScalarJetField& P0_tilde,
                                     const ScalarJetField& map_re,
                                     const ScalarJetField& map_im,
                                     std::span<const Point2> w_samples,
                                     double tol);

// Deterministic sample generators shared by verification paths and the CLI.
std::vector<Point3> random_points(const Rect& rect, int n, unsigned seed,
                                  double r_halfwidth = 3.141592653589793);
std::vector<Point2> random_points2(const Rect& rect, int n, unsigned seed);

}  // namespace sasaki
