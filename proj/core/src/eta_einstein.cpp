#include "sasaki/eta_einstein.hpp"

#include <cmath>
#include <random>

#include "sasaki/errors.hpp"

namespace sasaki {

namespace {

// Domain squares: generous for W >= 0, strictly inside the unit disk for
// W < 0 (the corner radius 0.7*sqrt(2) = 0.99 stays below the P0 zero set).
constexpr double kPlaneHalfWidth = 4.0;
constexpr double kDiskHalfWidth = 0.7;

Vec3<Jet3d> euler_transform_jets_impl(double W, const EulerPoint& y,
                                      int order) {
  if (W == 0.0)
    throw DomainError("the Euler chart exists only for W != 0");
  const Jet3d rho = Jet3d::variable(y.rho, 0, order);
  const Jet3d theta = Jet3d::variable(y.theta, 1, order);
  const Jet3d phi = Jet3d::variable(y.phi, 2, order);

  Vec3<Jet3d> out;
  if (W > 0.0) {
    if (!(y.theta > 0.0 && y.theta < 3.141592653589793))
      throw DomainError("theta outside (0, pi) in the positive Euler chart");
    const Jet3d t = tan(theta * 0.5);
    const Jet3d ct = cos(phi) * t;
    const Jet3d c = sqrt(ct * ct + 1.0);
    const Jet3d arg = sin(phi) * t / c;
    out[0] = (rho + phi) / W - (2.0 / W) * (ct / c) * atan(arg);
    out[1] = cos(phi) * t;
    out[2] = sin(phi) * t;
  } else {
    if (!(y.theta > 0.0))
      throw DomainError("theta must be positive in the negative Euler chart");
    const Jet3d t = tanh(theta * 0.5);
    const Jet3d ct = cos(phi) * t;
    const Jet3d c2 = 1.0 - ct * ct;
    if (c2.value() <= 0.0)
      throw DomainError("Euler chart degenerates: cos(phi) tanh(theta/2) at 1");
    const Jet3d c = sqrt(c2);
    const Jet3d arg = sin(phi) * t / c;
    if (std::abs(arg.value()) >= 1.0 - 1e-12)
      throw DomainError("artanh argument at the boundary of (-1, 1)");
    out[0] = (rho + phi) / W + (2.0 / W) * (ct / c) * atanh(arg);
    out[1] = cos(phi) * t;
    out[2] = sin(phi) * t;
  }
  return out;
}

class EulerFamilyMetric final : public MetricEvaluator {
public:
  explicit EulerFamilyMetric(double W) : W_(W) {}

  MetricJets components(const Point3& p, int order) const override {
    // coordinates (rho, theta, phi)
    const Jet3d theta = Jet3d::variable(p.u, 1, order);
    MetricJets g;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g[i][j] = Jet3d::constant(0.0, order);
    const double invW2 = 1.0 / (W_ * W_);
    if (W_ > 0.0) {
      g[0][0] = Jet3d::constant(invW2, order);
      g[0][2] = g[2][0] = cos(theta) * invW2;
      g[1][1] = Jet3d::constant(0.5 / W_, order);
      const Jet3d sn = sin(theta), cn = cos(theta);
      g[2][2] = sn * sn * (0.5 / W_) + cn * cn * invW2;
    } else if (W_ < 0.0) {
      g[0][0] = Jet3d::constant(invW2, order);
      g[0][2] = g[2][0] = cosh(theta) * invW2;
      g[1][1] = Jet3d::constant(-0.5 / W_, order);
      const Jet3d sh = sinh(theta), ch = cosh(theta);
      g[2][2] = sh * sh * (-0.5 / W_) + ch * ch * invW2;
    } else {
      throw DomainError("the Euler chart exists only for W != 0");
    }
    check_nondegenerate(g);
    return g;
  }

  std::array<std::string, 3> coordinate_names() const override {
    return {"rho", "theta", "phi"};
  }

private:
  double W_;
};

}  // namespace

EtaEinsteinFamily family_info(double W) {
  EtaEinsteinFamily f;
  f.W = W;
  f.a = 2.0 * W - 2.0;
  f.b = 4.0 - 2.0 * W;
  f.scalar_curvature = 4.0 * W - 2.0;
  if (W > 0.0) {
    f.sign_class = FamilyClass::positive;
    f.domain = {-kPlaneHalfWidth, kPlaneHalfWidth, -kPlaneHalfWidth,
                kPlaneHalfWidth};
  } else if (W == 0.0) {
    f.sign_class = FamilyClass::zero;
    f.domain = {-kPlaneHalfWidth, kPlaneHalfWidth, -kPlaneHalfWidth,
                kPlaneHalfWidth};
  } else {
    f.sign_class = FamilyClass::negative;
    f.domain = {-kDiskHalfWidth, kDiskHalfWidth, -kDiskHalfWidth,
                kDiskHalfWidth};
  }
  return f;
}

SasakianStructure family_structure(double W) {
  const EtaEinsteinFamily f = family_info(W);
  ScalarJetField p0;
  if (f.sign_class == FamilyClass::positive) {
    const double c = 0.5 * std::sqrt(W);
    p0 = field_from([c](const Jet2d& u, const Jet2d& v) {
      return (u * u + v * v + 1.0) * c;
    });
  } else if (f.sign_class == FamilyClass::zero) {
    p0 = constant_field(1.0 / std::sqrt(2.0));
  } else {
    const double c = 0.5 * std::sqrt(-W);
    p0 = field_from([c](const Jet2d& u, const Jet2d& v) {
      return (1.0 - u * u - v * v) * c;
    });
  }
  return build_normal_form(std::move(p0), f.domain, 0.0);
}

Point3 euler_transform(double W, const EulerPoint& y) {
  const Vec3<Jet3d> x = euler_transform_jets_impl(W, y, 0);
  return {x[0].value(), x[1].value(), x[2].value()};
}

Vec3<Jet3d> euler_transform_jets(double W, const EulerPoint& y, int order) {
  return euler_transform_jets_impl(W, y, order);
}

MetricPtr euler_metric(double W) {
  if (W == 0.0) throw DomainError("the Euler chart exists only for W != 0");
  return std::make_shared<EulerFamilyMetric>(W);
}

double euler_pullback_residual(const SasakianStructure& s, double W,
                               const EulerPoint& y) {
  const Vec3<Jet3d> x = euler_transform_jets(W, y, 1);
  const Point3 px{x[0].value(), x[1].value(), x[2].value()};
  const MetricJets gj = s.metric()->components(px, 0);
  const MetricJets ge =
      euler_metric(W)->components({y.rho, y.theta, y.phi}, 0);

  // J[i][a] = d x^i / d y^a
  double J[3][3];
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 3; ++a) J[i][a] = x[i].deriv(a).value();

  double res = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      double pb = 0.0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          pb += J[i][a] * J[j][b] * gj[i][j].value();
      res = std::max(res, std::abs(pb - ge[a][b].value()));
    }
  return res;
}

double eta_einstein_residual(const SasakianStructure& s, double a, double b,
                             std::span<const Point3> samples) {
  const MetricPtr metric = s.metric();
  double res = 0.0;
  for (const Point3& p : samples) {
    const CurvatureJets cj = curvature_jets(*metric, p, 2);
    const Vec3<double> eta = s.eta(p.u, p.v);
    Mat3<double> T, ginv;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        T[i][j] = cj.ricci[i][j].value() - a * cj.chris.g[i][j].value() -
                  b * eta.c[i] * eta.c[j];
        ginv[i][j] = cj.chris.ginv[i][j].value();
      }
    res = std::max(res, std::sqrt(std::abs(tensor_norm2(ginv, T))));
  }
  return res;
}

EtaEinsteinFit fit_eta_einstein(const SasakianStructure& s,
                                std::span<const Point3> samples, double tol) {
  if (samples.size() < 2)
    throw PreconditionError("eta-Einstein fit needs at least two samples");

  // Project Ricci on the adapted frame; there Ric = a g + b eta (x) eta
  // becomes R_00 = a + b, R_11 = R_22 = a.  Accumulate the 2x2 normal
  // equations of the least-squares problem.
  const Triad triad = s.adapted_triad();
  const MetricPtr metric = s.metric();
  double n11 = 0.0, n12 = 0.0, n22 = 0.0, r1 = 0.0, r2 = 0.0;
  for (const Point3& p : samples) {
    const TriadJets t = triad.jets(p, 0);
    const CurvatureJets cj = curvature_jets(*metric, p, 2);
    const Vec3<Jet3d>* e[3] = {&t.e0, &t.e1, &t.e2};
    double Rmm[3];
    for (int m = 0; m < 3; ++m) {
      double acc = 0.0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          acc += cj.ricci[i][j].value() * (*e[m])[i].value() *
                 (*e[m])[j].value();
      Rmm[m] = acc;
    }
    // rows: (a + b = R00), (a = R11), (a = R22)
    n11 += 3.0;
    n12 += 1.0;
    n22 += 1.0;
    r1 += Rmm[0] + Rmm[1] + Rmm[2];
    r2 += Rmm[0];
  }
  const double det = n11 * n22 - n12 * n12;
  if (std::abs(det) < 1e-12)
    throw PreconditionError("eta-Einstein fit is rank deficient");

  EtaEinsteinFit fit;
  fit.a = (n22 * r1 - n12 * r2) / det;
  fit.b = (n11 * r2 - n12 * r1) / det;
  fit.residual = eta_einstein_residual(s, fit.a, fit.b, samples);
  fit.eta_einstein = fit.residual <= tol;
  return fit;
}

std::vector<EulerPoint> random_euler_points(double W, int n, unsigned seed) {
  if (W == 0.0) throw DomainError("the Euler chart exists only for W != 0");
  // theta ranges keep tan/tanh(theta/2) inside the canonical domains:
  // tan(1.3) = 3.6 < 4 and tanh(0.85) = 0.69 < 0.7.
  const double theta_lo = 0.2;
  const double theta_hi = W > 0.0 ? 2.6 : 1.7;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> rrho(-1.0, 1.0);
  std::uniform_real_distribution<double> rtheta(theta_lo, theta_hi);
  std::uniform_real_distribution<double> rphi(0.0, 6.283185307179586);
  std::vector<EulerPoint> pts(n);
  for (auto& p : pts) p = {rrho(rng), rtheta(rng), rphi(rng)};
  return pts;
}

}  // namespace sasaki
