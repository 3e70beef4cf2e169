#include "sasaki/workflow.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>

#include <nlohmann/json.hpp>

#include "sasaki/conformal.hpp"
#include "sasaki/elliptic.hpp"
#include "sasaki/errors.hpp"
#include "sasaki/eta_einstein.hpp"
#include "sasaki/expression.hpp"
#include "sasaki/grid.hpp"
#include "sasaki/normal_form.hpp"
#include "sasaki/spin.hpp"

namespace sasaki {

namespace {

using nlohmann::json;

Rect rect_of(const JobSpec& job) {
  const auto& d = job.domain;
  if (!(d[1] > d[0]) || !(d[3] > d[2]))
    throw PreconditionError("domain must be u0,u1,v0,v1 with u1>u0, v1>v0");
  return {d[0], d[1], d[2], d[3]};
}

double baseline_v0(const JobSpec& job, const Rect& r) {
  if (job.v0_set) {
    if (job.v0 < r.v0 || job.v0 > r.v1)
      throw PreconditionError("v0 lies outside the domain");
    return job.v0;
  }
  if (r.v0 <= 0.0 && 0.0 <= r.v1) return 0.0;
  return 0.5 * (r.v0 + r.v1);
}

json inputs_of(const JobSpec& job) {
  json in = json::object();
  in["domain"] = job.domain;
  in["grid"] = job.grid;
  in["samples"] = job.samples;
  in["seed"] = job.seed;
  if (!job.p0.empty()) in["p0"] = job.p0;
  if (!job.p0_tilde.empty()) in["p0tilde"] = job.p0_tilde;
  if (!job.R.empty()) in["R"] = job.R;
  if (!job.boundary.empty()) in["boundary"] = job.boundary;
  if (!job.field.empty()) in["field"] = job.field;
  if (!job.zre.empty()) in["zre"] = job.zre;
  if (!job.zim.empty()) in["zim"] = job.zim;
  if (job.W_set) in["W"] = job.W;
  if (!job.out.empty()) in["out"] = job.out;
  if (!job.grid_csv.empty()) in["grid_csv"] = job.grid_csv;
  if (job.command == "plot") in["format"] = job.format;
  return in;
}

struct CommandResult {
  json residuals = json::object();
  bool pass = true;
};

void put_verification(json& res, const VerificationReport& rep) {
  res["killing_max"] = rep.killing_max;
  res["kappa_max"] = rep.kappa_max;
  res["sigma_max"] = rep.sigma_max;
  res["re_rho_max"] = rep.re_rho_max;
  res["im_rho_dev_max"] = rep.im_rho_dev_max;
  res["sas_eq_max"] = rep.sas_eq_max;
}

// scalar-curvature agreement of both routes over the samples
void put_curvature_scan(json& res, const SasakianStructure& s,
                        std::span<const Point3> pts) {
  double rmin = std::numeric_limits<double>::infinity(), rmax = -rmin;
  double dev = 0.0;
  const MetricPtr metric = s.metric();
  for (const Point3& p : pts) {
    const double r_tensor = curvature(*metric, p).scalar;
    const double r_tw = s.scalar_curvature_tw(p.u, p.v);
    rmin = std::min(rmin, r_tensor);
    rmax = std::max(rmax, r_tensor);
    dev = std::max(dev, std::abs(r_tensor - r_tw));
  }
  res["scalar_curvature_min"] = rmin;
  res["scalar_curvature_max"] = rmax;
  res["tw_vs_tensor_max"] = dev;
}

CommandResult cmd_verify(const JobSpec& job) {
  if (job.p0.empty()) throw PreconditionError("verify needs --p0");
  const double tol = job.tol > 0.0 ? job.tol : 1e-6;
  const Rect r = rect_of(job);
  const SasakianStructure s = build_normal_form(parse_field_expression(job.p0),
                                                r, baseline_v0(job, r));
  const auto pts = random_points(r, job.samples, job.seed);

  CommandResult out;
  const VerificationReport rep = verify_sasakian(s, pts, tol);
  put_verification(out.residuals, rep);
  put_curvature_scan(out.residuals, s, pts);
  out.residuals["tol"] = tol;
  out.pass = rep.pass &&
             out.residuals["tw_vs_tensor_max"].get<double>() <= tol;
  return out;
}

CommandResult cmd_build(const JobSpec& job) {
  if (job.p0.empty()) throw PreconditionError("build needs --p0");
  const Rect r = rect_of(job);
  const SasakianStructure s = build_normal_form(parse_field_expression(job.p0),
                                                r, baseline_v0(job, r));
  const std::string prefix = job.out.empty() ? "metric" : job.out;

  const MetricPtr metric = s.metric();
  const char* names[6] = {"g_rr", "g_ru", "g_rv", "g_uu", "g_uv", "g_vv"};
  const int idx[6][2] = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
  GridField comp[6];
  for (auto& g : comp) g = make_grid(r, job.grid, job.grid);
  double p0_min = std::numeric_limits<double>::infinity();
  for (int j = 0; j < job.grid; ++j)
    for (int i = 0; i < job.grid; ++i) {
      const Point3 p{0.0, comp[0].u(i), comp[0].v(j)};
      const MetricJets g = metric->components(p, 0);
      for (int k = 0; k < 6; ++k)
        comp[k].at(i, j) = g[idx[k][0]][idx[k][1]].value();
      p0_min = std::min(p0_min, std::abs(s.P0().eval(p.u, p.v, 0).value()));
    }
  for (int k = 0; k < 6; ++k)
    write_grid_csv(comp[k], prefix + "_" + names[k] + ".csv");

  CommandResult out;
  out.residuals["p0_min_abs"] = p0_min;
  return out;
}

CommandResult cmd_family(const JobSpec& job) {
  if (!job.W_set) throw PreconditionError("family needs --W");
  const double tol = job.tol > 0.0 ? job.tol : 1e-6;
  const EtaEinsteinFamily info = family_info(job.W);
  const SasakianStructure s = family_structure(job.W);
  const auto pts = random_points(info.domain, job.samples, job.seed);

  CommandResult out;
  const VerificationReport rep = verify_sasakian(s, pts, tol);
  put_verification(out.residuals, rep);
  put_curvature_scan(out.residuals, s, pts);

  const EtaEinsteinFit fit = fit_eta_einstein(s, pts, tol);
  out.residuals["a"] = fit.a;
  out.residuals["b"] = fit.b;
  out.residuals["a_plus_b_dev"] = std::abs(fit.a + fit.b - 2.0);
  out.residuals["fit_residual"] = fit.residual;
  out.residuals["scalar_curvature"] = info.scalar_curvature;
  out.residuals["W"] = job.W;
  out.residuals["tol"] = tol;

  double euler_max = 0.0;
  if (job.W != 0.0) {
    for (const EulerPoint& y :
         random_euler_points(job.W, std::min(job.samples, 50), job.seed + 1))
      euler_max = std::max(euler_max, euler_pullback_residual(s, job.W, y));
    out.residuals["euler_pullback_max"] = euler_max;
  }
  out.pass = rep.pass && fit.eta_einstein && euler_max <= 1e-6;
  return out;
}

CommandResult cmd_solve(const JobSpec& job) {
  if (job.R.empty()) throw PreconditionError("solve needs --R");
  const double tol = job.tol > 0.0 ? job.tol : 5e-3;
  const Rect r = rect_of(job);
  const ScalarJetField R_target = parse_field_expression(job.R);
  const ScalarJetField bphi = job.boundary.empty()
                                  ? constant_field(0.0)
                                  : parse_field_expression(job.boundary);

  const PrescribedCurvatureResult sol =
      solve_prescribed_curvature(R_target, r, job.grid, bphi);

  GridField p0_grid = sol.phi;
  for (double& x : p0_grid.values) x = std::exp(x);
  if (!job.out.empty()) write_grid_csv(p0_grid, job.out);

  // end-to-end: rebuild the structure from the solved P0 and compare its
  // tensor-route scalar curvature with the target.  The comparison region
  // keeps a 6.25%-of-width margin to the boundary, where incompatible
  // Dirichlet corner data would otherwise dominate the measurement.
  const SasakianStructure s =
      build_normal_form(grid_to_field(p0_grid), r, baseline_v0(job, r));
  const MetricPtr metric = s.metric();
  const double margin =
      std::max(2.0 * p0_grid.h, 0.0625 * std::min(r.width(), r.height()));
  const Rect inner{r.u0 + margin, r.u1 - margin, r.v0 + margin,
                   r.v1 - margin};
  double e2e = 0.0;
  for (const Point3& p : random_points(inner, job.samples, job.seed))
    e2e = std::max(e2e, std::abs(curvature(*metric, p).scalar -
                                 R_target.eval(p.u, p.v, 0).value()));

  CommandResult out;
  out.residuals["newton_iterations"] = sol.report.iterations;
  out.residuals["newton_residual"] = sol.report.final_residual;
  out.residuals["monotone_jacobian"] = sol.report.monotone_jacobian ? 1.0 : 0.0;
  out.residuals["end_to_end_max"] = e2e;
  out.residuals["tol"] = tol;
  out.pass = e2e <= tol;
  return out;
}

CommandResult cmd_conformal(const JobSpec& job) {
  const double tol = job.tol > 0.0 ? job.tol : 1e-5;
  SasakianStructure s = [&] {
    if (job.W_set) return family_structure(job.W);
    if (job.p0.empty())
      throw PreconditionError("conformal needs --p0 or --W");
    const Rect r = rect_of(job);
    return build_normal_form(parse_field_expression(job.p0), r,
                             baseline_v0(job, r));
  }();
  const Rect r = job.W_set ? family_info(job.W).domain : rect_of(job);
  const auto pts = random_points(r, std::min(job.samples, 40), job.seed);

  const CottonReport rep = conformal_flatness_check(s, pts, tol);

  // route consistency: component formulas vs tensor projection on the frame
  const Triad triad = s.adapted_triad();
  const MetricPtr metric = s.metric();
  double route_dev = 0.0;
  for (const Point3& p : pts) {
    const auto [c00, cpm] = cotton_components_sasakian(s, {p.u, p.v});
    const WeylSchouten ws = weyl_schouten(*metric, p);
    const TriadJets t = triad.jets(p, 0);
    const ComplexFrameJets fr = complex_frame(t, p, 0);
    Complex c00_t = 0.0, cpm_t = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        c00_t += ws.C[i][j] * fr.e0[i].value() * fr.e0[j].value();
        cpm_t += ws.C[i][j] * fr.ep[i].value() * fr.em[j].value();
      }
    route_dev = std::max({route_dev, std::abs(c00_t - c00),
                          std::abs(cpm_t - cpm)});
  }

  CommandResult out;
  out.residuals["cotton_norm_max"] = rep.max_norm;
  out.residuals["C00"] = rep.C00;
  out.residuals["Cpm"] = rep.Cpm;
  out.residuals["route_dev_max"] = route_dev;
  out.residuals["flat"] = rep.flat ? 1.0 : 0.0;
  out.residuals["tol"] = tol;
  out.pass = route_dev <= 1e-6;
  return out;
}

CommandResult cmd_isometry(const JobSpec& job) {
  if (job.p0.empty() || job.p0_tilde.empty() || job.zre.empty() ||
      job.zim.empty())
    throw PreconditionError("isometry needs --p0, --p0tilde, --zre, --zim");
  const double tol = job.tol > 0.0 ? job.tol : 1e-10;
  const Rect r = rect_of(job);
  const auto pts = random_points2(r, job.samples, job.seed);

  const IsometryCheck chk = contact_isometry_check(
      parse_field_expression(job.p0), parse_field_expression(job.p0_tilde),
      parse_field_expression(job.zre), parse_field_expression(job.zim), pts,
      tol);

  CommandResult out;
  out.residuals["max_residual"] = chk.max_residual;
  out.residuals["tol"] = tol;
  out.pass = chk.contact_isometric;
  return out;
}

void write_ppm(const GridField& g, const std::string& path) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (double x : g.values) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  const double span = hi > lo ? hi - lo : 1.0;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open '" + path + "' for writing");
  out << "P6\n" << g.nx << ' ' << g.ny << "\n255\n";
  const auto stop = [](double t, double a, double b) {
    return static_cast<unsigned char>(255.0 * (a + (b - a) * t) + 0.5);
  };
  for (int j = g.ny - 1; j >= 0; --j)  // image rows top-down
    for (int i = 0; i < g.nx; ++i) {
      const double t = (g.at(i, j) - lo) / span;
      unsigned char rgb[3];
      if (t < 0.5) {
        const double s = 2.0 * t;  // blue -> white
        rgb[0] = stop(s, 0.10, 0.95);
        rgb[1] = stop(s, 0.15, 0.95);
        rgb[2] = stop(s, 0.60, 0.95);
      } else {
        const double s = 2.0 * t - 1.0;  // white -> red
        rgb[0] = stop(s, 0.95, 0.70);
        rgb[1] = stop(s, 0.95, 0.10);
        rgb[2] = stop(s, 0.95, 0.10);
      }
      out.write(reinterpret_cast<const char*>(rgb), 3);
    }
  if (!out) throw DomainError("write failed for '" + path + "'");
}

void write_table(const GridField& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot open '" + path + "' for writing");
  char buf[96];
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", g.u(i), g.v(j),
                    g.at(i, j));
      out << buf;
    }
    out << '\n';
  }
}

CommandResult cmd_plot(const JobSpec& job) {
  if (job.out.empty()) throw PreconditionError("plot needs --out");
  GridField g;
  if (!job.grid_csv.empty()) {
    g = read_grid_csv(job.grid_csv);
  } else if (!job.field.empty()) {
    g = sample_to_grid(parse_field_expression(job.field), rect_of(job),
                       job.grid);
  } else {
    throw PreconditionError("plot needs --field or --grid-csv");
  }

  if (job.format == "ppm")
    write_ppm(g, job.out);
  else if (job.format == "table")
    write_table(g, job.out);
  else
    throw PreconditionError("plot format must be ppm or table");

  CommandResult out;
  out.residuals["nodes"] = static_cast<double>(g.values.size());
  return out;
}

}  // namespace

RunReport run(const JobSpec& job) {
  const auto t0 = std::chrono::steady_clock::now();
  json doc;
  doc["command"] = job.command;
  doc["inputs"] = inputs_of(job);

  RunReport rep;
  try {
    CommandResult res;
    if (job.command == "verify")
      res = cmd_verify(job);
    else if (job.command == "build")
      res = cmd_build(job);
    else if (job.command == "family")
      res = cmd_family(job);
    else if (job.command == "solve")
      res = cmd_solve(job);
    else if (job.command == "conformal")
      res = cmd_conformal(job);
    else if (job.command == "isometry")
      res = cmd_isometry(job);
    else if (job.command == "plot")
      res = cmd_plot(job);
    else
      throw PreconditionError("unknown command '" + job.command + "'");

    doc["residuals"] = res.residuals;
    doc["verdict"] = res.pass ? "pass" : "fail";
    rep.exit_code = res.pass ? 0 : 1;
    rep.verdict = res.pass ? "pass" : "fail";
  } catch (const ConvergenceError& e) {
    doc["residuals"] = json::object();
    doc["error"] = e.what();
    doc["verdict"] = "fail";
    rep.exit_code = 1;
    rep.verdict = "fail";
  } catch (const AccuracyError& e) {
    doc["residuals"] = json::object();
    doc["error"] = e.what();
    doc["verdict"] = "fail";
    rep.exit_code = 1;
    rep.verdict = "fail";
  } catch (const Error& e) {
    doc["residuals"] = json::object();
    doc["error"] = e.what();
    doc["verdict"] = "error";
    rep.exit_code = 2;
    rep.verdict = "error";
  } catch (const std::exception& e) {
    doc["residuals"] = json::object();
    doc["error"] = e.what();
    doc["verdict"] = "error";
    rep.exit_code = 2;
    rep.verdict = "error";
  }

  const auto t1 = std::chrono::steady_clock::now();
  doc["runtime_ms"] = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
  rep.json = doc.dump(2);

  if (!job.report_path.empty()) {
    std::ofstream out(job.report_path);
    if (out) out << rep.json << '\n';
  }
  return rep;
}

JobSpec job_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open job file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed job file: ") + e.what());
  }

  JobSpec job;
  const auto str = [&](const char* key, std::string& dst) {
    if (doc.contains(key)) dst = doc.at(key).get<std::string>();
  };
  str("command", job.command);
  str("p0", job.p0);
  str("p0tilde", job.p0_tilde);
  str("R", job.R);
  str("boundary", job.boundary);
  str("field", job.field);
  str("zre", job.zre);
  str("zim", job.zim);
  str("out", job.out);
  str("format", job.format);
  str("grid_csv", job.grid_csv);
  str("report", job.report_path);
  if (doc.contains("domain")) {
    job.domain = doc.at("domain").get<std::array<double, 4>>();
    job.domain_set = true;
  }
  if (doc.contains("grid")) job.grid = doc.at("grid").get<int>();
  if (doc.contains("samples")) job.samples = doc.at("samples").get<int>();
  if (doc.contains("seed")) job.seed = doc.at("seed").get<unsigned>();
  if (doc.contains("W")) {
    job.W = doc.at("W").get<double>();
    job.W_set = true;
  }
  if (doc.contains("tol")) job.tol = doc.at("tol").get<double>();
  if (doc.contains("v0")) {
    job.v0 = doc.at("v0").get<double>();
    job.v0_set = true;
  }
  return job;
}

}  // namespace sasaki
