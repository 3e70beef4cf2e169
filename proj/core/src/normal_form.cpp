#include "sasaki/normal_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "sasaki/errors.hpp"
#include "sasaki/spin.hpp"

namespace sasaki {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;

class NormalFormMetric final : public MetricEvaluator {
public:
  NormalFormMetric(ScalarJetField p0, Rect domain, double v0,
                   QuadratureOptions quad)
      : p0_(std::move(p0)), domain_(domain), v0_(v0), quad_(quad) {}

  MetricJets components(const Point3& p, int order) const override {
    if (!domain_.contains(p.u, p.v))
      throw DomainError("normal-form metric evaluated outside its domain");
    const Jet2d p0 = p0_.eval(p.u, p.v, order);
    const Jet2d A = integral_A(p0_, p.u, p.v, v0_, order, quad_);
    const Jet2d B = 0.5 / (p0 * p0);

    MetricJets g;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g[i][j] = Jet3d::constant(0.0, order);
    g[0][0] = Jet3d::constant(1.0, order);
    g[0][1] = g[1][0] = lift_uv(A);
    g[1][1] = lift_uv(A * A + B);
    g[2][2] = lift_uv(B);
    return g;
  }

private:
  ScalarJetField p0_;
  Rect domain_;
  double v0_;
  QuadratureOptions quad_;
};

// R(X,W)Y from precomputed Riemann values.
Vec3<double> riemann_apply(const CurvatureJets& cj, const Vec3<double>& X,
                           const Vec3<double>& W, const Vec3<double>& Y) {
  Vec3<double> out{};
  for (int i = 0; i < 3; ++i) {
    double s = 0.0;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          s += cj.riemann_up[i][j][k][l].value() * Y[j] * X[k] * W[l];
    out[i] = s;
  }
  return out;
}

}  // namespace

Jet2d integral_A(const ScalarJetField& P0, double u, double v, double v0,
                 int order, const QuadratureOptions& quad) {
  const auto integrand = [&](double s) {
    const Jet2d pj = P0.eval(u, s, order);
    const Jet2d w = 1.0 / (pj * pj);
    std::vector<double> out(order + 1);
    for (int a = 0; a <= order; ++a) out[a] = w.d(a, 0);
    return out;
  };
  const std::vector<double> I =
      integrate_adaptive(integrand, v0, v, quad.tol_for_order(order),
                         quad.max_depth, P0.v_breakpoints());

  Jet2d A = Jet2d::constant(I[0], order);
  for (int a = 1; a <= order; ++a) A.set_d(a, 0, I[a]);

  if (order >= 1) {
    // every coefficient with at least one v-derivative reads off the
    // integrand jet at the endpoint
    const Jet2d pe = P0.eval(u, v, order);
    const Jet2d w = 1.0 / (pe * pe);
    for (int a = 0; a < order; ++a)
      for (int b = 1; a + b <= order; ++b) A.set_d(a, b, w.d(a, b - 1));
  }
  return A;
}

double omega0(const ScalarJetField& P0, double u, double v, double v0,
              const QuadratureOptions& quad) {
  const Jet2d A = integral_A(P0, u, v, v0, 0, quad);
  return -P0.eval(u, v, 0).value() * A.value();
}

std::complex<double> compute_tau0(const ScalarJetField& P0,
                                  const ScalarJetField& Omega0, Point2 p) {
  const CJet2 dz = wirtinger_dz(P0.eval(p.u, p.v, 1));
  const std::complex<double> i(0.0, 1.0);
  return 2.0 * dz.value() - i * Omega0.eval(p.u, p.v, 0).value();
}

double scalar_curvature_tw(const ScalarJetField& P0, Point2 p) {
  const Jet2d p0 = P0.eval(p.u, p.v, 2);
  if (p0.value() == 0.0) throw DomainError("P0 vanishes at the query point");
  const Jet2d lnp = log(abs(p0));
  const double lap = lnp.d(2, 0) + lnp.d(0, 2);
  const double p0v = p0.value();
  return 4.0 * p0v * p0v * lap - 2.0;
}

ReducedResiduals reduced_system_residual(const ScalarJetField& P0,
                                         const ScalarJetField& Omega0,
                                         const ComplexJetField& tau0,
                                         const ScalarJetField& R, Point2 p) {
  using C = std::complex<double>;
  const C i(0.0, 1.0);

  const Jet2d p0 = P0.eval(p.u, p.v, 1);
  const CJet2 om = complexify(Omega0.eval(p.u, p.v, 1));
  const CJet2 ta = tau0.eval(p.u, p.v, 1);
  const double Rv = R.eval(p.u, p.v, 0).value();

  const C p0v = p0.value();
  const C omv = om.value(), omb = std::conj(omv);
  const C tav = ta.value(), tab = std::conj(tav);

  const C dtau_dzbar = wirtinger_dzbar(ta).value();
  const C dtaub_dz = wirtinger_dz(conj(ta)).value();
  const C domb_dzbar = wirtinger_dzbar(conj(om)).value();
  const C dom_dz = wirtinger_dz(om).value();
  const C dp0_dzbar = wirtinger_dzbar(complexify(p0)).value();

  const C r1 = 2.0 * p0v * (dtau_dzbar + dtaub_dz) + i * (omv * tav - omb * tab) -
               (2.0 * tav * tab - 1.0 + 0.5 * Rv);
  const C r2 = 2.0 * p0v * (domb_dzbar - dom_dz) + 2.0 * i * (omv * omb) -
               (tab * omb - tav * omv - 2.0 * i);
  const C r3 = 2.0 * dp0_dzbar - (tab - i * omv);
  return {r1.real(), r2, r3};
}

Jet2d SasakianStructure::A(double u, double v, int order) const {
  return integral_A(p0_, u, v, v0_, order, quad_);
}

Jet2d SasakianStructure::omega0_jet(double u, double v, int order) const {
  return -(p0_.eval(u, v, order) * A(u, v, order));
}

CJet2 SasakianStructure::tau0_jet(double u, double v, int order) const {
  if (order > 2)
    throw CapabilityError("tau0 jets are limited to order 2");
  const CJet2 dz = wirtinger_dz(p0_.eval(u, v, order + 1));
  const CJet2 om = complexify(omega0_jet(u, v, order));
  const std::complex<double> i(0.0, 1.0);
  return 2.0 * dz - om * i;
}

Vec3<double> SasakianStructure::eta(double u, double v) const {
  return {1.0, A(u, v, 0).value(), 0.0};
}

Triad SasakianStructure::adapted_triad() const {
  const ScalarJetField p0 = p0_;
  const Rect dom = domain_;
  const double v0 = v0_;
  const QuadratureOptions quad = quad_;
  return Triad([p0, dom, v0, quad](const Point3& p, int order) {
    if (!dom.contains(p.u, p.v))
      throw DomainError("adapted frame evaluated outside the structure domain");
    const Jet2d pj = p0.eval(p.u, p.v, order);
    const Jet2d Aj = integral_A(p0, p.u, p.v, v0, order, quad);
    const Jet2d sp = pj * kSqrt2;  // sqrt(2) P0

    TriadJets t;
    for (int i = 0; i < 3; ++i) {
      t.e0[i] = Jet3d::constant(i == 0 ? 1.0 : 0.0, order);
      t.e1[i] = Jet3d::constant(0.0, order);
      t.e2[i] = Jet3d::constant(0.0, order);
    }
    t.e1[0] = lift_uv(-(sp * Aj));
    t.e1[1] = lift_uv(sp);
    t.e2[2] = lift_uv(-sp);
    t.phase_rotated = true;
    return t;
  });
}

ScalarJetField SasakianStructure::omega0_field() const {
  const SasakianStructure s = *this;
  return ScalarJetField(
      [s](double u, double v, int order) { return s.omega0_jet(u, v, order); });
}

ComplexJetField SasakianStructure::tau0_field() const {
  const SasakianStructure s = *this;
  return ComplexJetField(
      [s](double u, double v, int order) { return s.tau0_jet(u, v, order); });
}

ScalarJetField SasakianStructure::scalar_curvature_field() const {
  const ScalarJetField p0 = p0_;
  return ScalarJetField([p0](double u, double v, int order) {
    if (order > 1)
      throw CapabilityError("scalar-curvature jets are limited to order 1");
    const Jet2d pj = p0.eval(u, v, order + 2);
    const Jet2d lnp = log(abs(pj));
    const Jet2d lap = lnp.deriv(0).deriv(0) + lnp.deriv(1).deriv(1);
    return (4.0 * (pj * pj).truncated(order) * lap - 2.0).truncated(order);
  });
}

double SasakianStructure::scalar_curvature_tw(double u, double v) const {
  return sasaki::scalar_curvature_tw(p0_, {u, v});
}

SasakianStructure build_normal_form(ScalarJetField P0, Rect domain, double v0,
                                    QuadratureOptions quad) {
  if (!(domain.u1 > domain.u0) || !(domain.v1 > domain.v0))
    throw DomainError("domain rectangle is empty");
  if (v0 < domain.v0 || v0 > domain.v1)
    throw DomainError("integration baseline v0 lies outside the domain");

  // zero-crossing scan (heuristic): 64x64 uniform samples
  constexpr int kScan = 64;
  double minabs = std::numeric_limits<double>::infinity(), maxabs = 0.0;
  bool pos = false, neg = false;
  for (int i = 0; i < kScan; ++i)
    for (int j = 0; j < kScan; ++j) {
      const double u = domain.u0 + domain.width() * i / (kScan - 1);
      const double v = domain.v0 + domain.height() * j / (kScan - 1);
      const double val = P0.eval(u, v, 0).value();
      if (!std::isfinite(val))
        throw DomainError("P0 is not finite on the domain");
      (val > 0.0 ? pos : neg) = true;
      minabs = std::min(minabs, std::abs(val));
      maxabs = std::max(maxabs, std::abs(val));
    }
  if ((pos && neg) || minabs <= 1e-12 * std::max(1.0, maxabs))
    throw DomainError("P0 vanishes (or changes sign) within the domain");

  SasakianStructure s;
  s.p0_ = std::move(P0);
  s.v0_ = v0;
  s.domain_ = domain;
  s.quad_ = quad;
  s.metric_ = std::make_shared<NormalFormMetric>(s.p0_, domain, v0, quad);
  return s;
}

VerificationReport verify_sasakian(const MetricEvaluator& metric,
                                   const Triad& triad,
                                   std::span<const Point3> samples, double tol) {
  VerificationReport rep;
  rep.tol = tol;

  for (const Point3& p : samples) {
    const TriadJets tj = triad.jets(p, 1);
    const VectorFieldJets e0_field = [&triad](const Point3& q, int order) {
      return triad.jets(q, order).e0;
    };

    const Mat3<double> K = killing_residual(metric, e0_field, p);
    const CurvatureJets cj = curvature_jets(metric, p, 2);
    Mat3<double> g, ginv;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        g[i][j] = cj.chris.g[i][j].value();
        ginv[i][j] = cj.chris.ginv[i][j].value();
      }
    rep.killing_max =
        std::max(rep.killing_max, std::sqrt(std::abs(tensor_norm2(ginv, K))));

    const SpinCoefficients sc = spin_coefficients(metric, triad, p);
    rep.kappa_max = std::max(rep.kappa_max, std::abs(sc.kappa));
    rep.sigma_max = std::max(rep.sigma_max, std::abs(sc.sigma));
    rep.re_rho_max = std::max(rep.re_rho_max, std::abs(sc.rho.real()));
    rep.im_rho_dev_max =
        std::max(rep.im_rho_dev_max, std::abs(sc.rho.imag() - 1.0));

    // curvature endomorphism condition over the nine frame pairs
    Vec3<double> e[3];
    for (int i = 0; i < 3; ++i) {
      e[0][i] = tj.e0[i].value();
      e[1][i] = tj.e1[i].value();
      e[2][i] = tj.e2[i].value();
    }
    const auto ip = [&](const Vec3<double>& a, const Vec3<double>& b) {
      double s = 0.0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += g[i][j] * a[i] * b[j];
      return s;
    };
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const Vec3<double> lhs = riemann_apply(cj, e[a], e[0], e[b]);
        Vec3<double> diff{};
        const double gy = ip(e[0], e[b]), gxy = ip(e[a], e[b]);
        for (int i = 0; i < 3; ++i)
          diff[i] = lhs[i] - (gy * e[a][i] - gxy * e[0][i]);
        rep.sas_eq_max = std::max(rep.sas_eq_max, std::sqrt(ip(diff, diff)));
      }
  }

  rep.pass = rep.killing_max <= tol && rep.kappa_max <= tol &&
             rep.sigma_max <= tol && rep.re_rho_max <= tol &&
             rep.im_rho_dev_max <= tol && rep.sas_eq_max <= tol;
  return rep;
}

VerificationReport verify_sasakian(const SasakianStructure& s,
                                   std::span<const Point3> samples, double tol) {
  return verify_sasakian(*s.metric(), s.adapted_triad(), samples, tol);
}

IsometryCheck contact_isometry_check(const ScalarJetField& P0,
                                     const ScalarJetField& P0_tilde,
                                     const ScalarJetField& map_re,
                                     const ScalarJetField& map_im,
                                     std::span<const Point2> w_samples,
                                     double tol) {
  IsometryCheck out;
  for (const Point2& w : w_samples) {
    const Jet2d re = map_re.eval(w.u, w.v, 1);
    const Jet2d im = map_im.eval(w.u, w.v, 1);
    const double cr1 = re.d(1, 0) - im.d(0, 1);
    const double cr2 = re.d(0, 1) + im.d(1, 0);
    if (std::abs(cr1) > 1e-10 || std::abs(cr2) > 1e-10)
      throw PreconditionError("coordinate map is not holomorphic");

    const double zu = re.d(1, 0), zv = im.d(1, 0);  // dz/dw = d(re)/du + i d(im)/du
    const double jac2 = zu * zu + zv * zv;          // |dz/dw|^2

    const double pt = P0_tilde.eval(w.u, w.v, 0).value();
    const double pz = P0.eval(re.value(), im.value(), 0).value();
    const double residual = std::abs(pt * pt * jac2 - pz * pz);
    out.max_residual = std::max(out.max_residual, residual);
  }
  out.contact_isometric = out.max_residual <= tol;
  return out;
}

std::vector<Point3> random_points(const Rect& rect, int n, unsigned seed,
                                  double r_halfwidth) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ur(rect.u0, rect.u1);
  std::uniform_real_distribution<double> vr(rect.v0, rect.v1);
  std::uniform_real_distribution<double> rr(-r_halfwidth, r_halfwidth);
  std::vector<Point3> pts(n);
  for (auto& p : pts) p = {rr(rng), ur(rng), vr(rng)};
  return pts;
}

std::vector<Point2> random_points2(const Rect& rect, int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ur(rect.u0, rect.u1);
  std::uniform_real_distribution<double> vr(rect.v0, rect.v1);
  std::vector<Point2> pts(n);
  for (auto& p : pts) p = {ur(rng), vr(rng)};
  return pts;
}

}  // namespace sasaki
