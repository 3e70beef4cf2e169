#pragma once

// Constant-curvature (eta-Einstein) families: Ric = a g + b eta (x) eta with
// a = 2W - 2, b = 4 - 2W, scalar curvature R = 4W - 2, where W is the
// Tanaka-Webster curvature.  The three sign classes have generating functions
//
//   W > 0 : P0 = sqrt(W)/2 (1 + u^2 + v^2)       (round sphere at W = 2)
//   W = 0 : P0 = 1/sqrt(2)                        (Nil)
//   W < 0 : P0 = sqrt(-W)/2 (1 - u^2 - v^2)       (SL2R-type, unit disk)
//
// plus the Euler-coordinate picture of the W != 0 metrics and the
// transformation between the two charts.

#include <span>

#include "sasaki/normal_form.hpp"

namespace sasaki {

enum class FamilyClass { positive, zero, negative };

struct EtaEinsteinFamily {
  double W = 0.0;
  FamilyClass sign_class = FamilyClass::zero;
  Rect domain;
  double a = 0.0;
  double b = 0.0;
  double scalar_curvature = 0.0;
};

EtaEinsteinFamily family_info(double W);

// Structure of the family on its canonical domain (the W < 0 domain is a
// square inside the unit disk; consumers sample within it).
SasakianStructure family_structure(double W);

struct EulerPoint {
  double rho = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

// Euler-coordinate chart (rho, theta, phi) -> (r, u, v); W != 0.
// Positive class requires theta in (0, pi), negative class theta > 0.
Point3 euler_transform(double W, const EulerPoint& y);

// Same map with first derivatives (the Jacobian used by pullback checks);
// jets are taken in the coordinates (rho, theta, phi).
Vec3<Jet3d> euler_transform_jets(double W, const EulerPoint& y, int order);

// The Euler-coordinate form of the family metric, as an evaluator over
// (rho, theta, phi).  Degenerates at theta in {0, pi} (positive class)
// and theta = 0 (negative class).
MetricPtr euler_metric(double W);

// max |(pullback of the normal-form metric) - (Euler-form metric)| at y.
double euler_pullback_residual(const SasakianStructure& s, double W,
                               const EulerPoint& y);

// max over samples of the invariant norm of Ric - a g - b eta (x) eta.
double eta_einstein_residual(const SasakianStructure& s, double a, double b,
                             std::span<const Point3> samples);

struct EtaEinsteinFit {
  double a = 0.0;
  double b = 0.0;
  double residual = 0.0;
  bool eta_einstein = false;  // residual within tolerance
};

// Least-squares inversion of Ric = a g + b eta (x) eta over the samples.
// Requires at least two samples; throws PreconditionError otherwise.
EtaEinsteinFit fit_eta_einstein(const SasakianStructure& s,
                                std::span<const Point3> samples,
                                double tol = 1e-6);

// Euler-chart points whose image stays inside the canonical family domain
// (theta capped so tan/tanh of theta/2 keeps (u,v) within the rectangle).
std::vector<EulerPoint> random_euler_points(double W, int n, unsigned seed);

}  // namespace sasaki
