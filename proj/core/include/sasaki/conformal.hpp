#pragma once

// Conformal flatness in three dimensions: the tensor C_ij = R_ij - R/4 g_ij
// and its antisymmetrized covariant derivative nabla_[i C_j]k, which
// vanishes exactly when the metric is conformally flat.

#include <span>
#include <utility>

#include "sasaki/normal_form.hpp"

namespace sasaki {

struct WeylSchouten {
  Mat3<double> C;  // R_ij - R/4 g_ij
  // grad[i][j][k] = nabla_[i C_j]k, antisymmetric in (i, j)
  std::array<Mat3<double>, 3> grad;
  double norm = 0.0;  // invariant norm of grad
};

// Needs third metric derivatives; raises CapabilityError when the metric
// cannot supply them.
WeylSchouten weyl_schouten(const MetricEvaluator& metric, const Point3& p);

// (C_00, C_+-) on the adapted frame of a normal-form structure, computed
// through the generating function: C_00 = 2 - R/4 and C_+- = R/4 - 1.
std::pair<double, double> cotton_components_sasakian(const SasakianStructure& s,
                                                     Point2 p);

struct CottonReport {
  double max_norm = 0.0;  // max invariant norm of nabla_[i C_j]k over samples
  double C00 = 0.0;       // components at the first sample
  double Cpm = 0.0;
  double c00_half_dev = 0.0;  // max |C_00 - 1/2| over samples
  double cpm_half_dev = 0.0;  // max |C_+- - 1/2| over samples
  double tol = 0.0;
  bool flat = false;
  bool einstein_signature = false;  // C_00 = C_+- = 1/2 within 1e-6
};

CottonReport conformal_flatness_check(const SasakianStructure& s,
                                      std::span<const Point3> samples,
                                      double tol = 1e-5);

}  // namespace sasaki
