// Command-line front end: flag parsing only; the work happens in
// sasaki::run().  Flags override values loaded from --job files.

#include <array>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sasaki/errors.hpp"
#include "sasaki/workflow.hpp"

namespace {

struct FlagSet {
  std::string p0, p0_tilde, R, boundary, field, zre, zim;
  std::vector<double> domain;
  int grid = 0;
  int samples = 0;
  unsigned seed = 0;
  double W = 0.0;
  double tol = 0.0;
  double v0 = 0.0;
  std::string out, format, grid_csv, report, job_file;
};

void add_common(CLI::App* cmd, FlagSet& f) {
  cmd->add_option("--job", f.job_file, "JSON job file (flags take precedence)");
  cmd->add_option("--domain", f.domain,
                  "domain rectangle u0,u1,v0,v1")
      ->delimiter(',')
      ->expected(4);
  cmd->add_option("--grid", f.grid, "grid nodes per side");
  cmd->add_option("--samples", f.samples, "number of sample points");
  cmd->add_option("--seed", f.seed, "RNG seed");
  cmd->add_option("--tol", f.tol, "tolerance override");
  cmd->add_option("--v0", f.v0, "integration baseline v0");
  cmd->add_option("--report", f.report, "write the JSON report here too");
  cmd->add_option("--out", f.out, "output path or prefix");
}

void merge(const CLI::App* cmd, const FlagSet& f, sasaki::JobSpec& job) {
  const auto set = [&](const char* name) { return cmd->count(name) > 0; };
  if (set("--domain")) {
    for (int i = 0; i < 4; ++i) job.domain[i] = f.domain[i];
    job.domain_set = true;
  }
  if (set("--grid")) job.grid = f.grid;
  if (set("--samples")) job.samples = f.samples;
  if (set("--seed")) job.seed = f.seed;
  if (set("--tol")) job.tol = f.tol;
  if (set("--v0")) {
    job.v0 = f.v0;
    job.v0_set = true;
  }
  if (set("--report")) job.report_path = f.report;
  if (set("--out")) job.out = f.out;
  if (cmd->get_option_no_throw("--p0") && set("--p0")) job.p0 = f.p0;
  if (cmd->get_option_no_throw("--p0tilde") && set("--p0tilde"))
    job.p0_tilde = f.p0_tilde;
  if (cmd->get_option_no_throw("--R") && set("--R")) job.R = f.R;
  if (cmd->get_option_no_throw("--boundary") && set("--boundary"))
    job.boundary = f.boundary;
  if (cmd->get_option_no_throw("--field") && set("--field")) job.field = f.field;
  if (cmd->get_option_no_throw("--zre") && set("--zre")) job.zre = f.zre;
  if (cmd->get_option_no_throw("--zim") && set("--zim")) job.zim = f.zim;
  if (cmd->get_option_no_throw("--W") && set("--W")) {
    job.W = f.W;
    job.W_set = true;
  }
  if (cmd->get_option_no_throw("--format") && set("--format"))
    job.format = f.format;
  if (cmd->get_option_no_throw("--grid-csv") && set("--grid-csv"))
    job.grid_csv = f.grid_csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical workbench for Sasakian 3-manifold structures"};
  app.require_subcommand(0, 1);

  FlagSet f;
  std::string top_job;
  app.add_option("--job", top_job, "JSON job file naming the command");

  CLI::App* c_build = app.add_subcommand("build", "export the normal-form metric of a P0");
  c_build->add_option("--p0", f.p0, "generating function P0(u,v)");
  add_common(c_build, f);

  CLI::App* c_verify = app.add_subcommand("verify", "verify the Sasakian characterization of a P0");
  c_verify->add_option("--p0", f.p0, "generating function P0(u,v)");
  add_common(c_verify, f);

  CLI::App* c_family = app.add_subcommand("family", "constant-curvature family report for a given W");
  c_family->add_option("--W", f.W, "Tanaka-Webster curvature");
  add_common(c_family, f);

  CLI::App* c_solve = app.add_subcommand("solve", "solve the prescribed-scalar-curvature problem");
  c_solve->add_option("--R", f.R, "curvature target R(u,v)");
  c_solve->add_option("--boundary", f.boundary, "boundary values of phi = ln P0");
  add_common(c_solve, f);

  CLI::App* c_conf = app.add_subcommand("conformal", "conformal-flatness report");
  c_conf->add_option("--p0", f.p0, "generating function P0(u,v)");
  c_conf->add_option("--W", f.W, "family selector");
  add_common(c_conf, f);

  CLI::App* c_iso = app.add_subcommand("isometry", "contact-isometry criterion for two P0");
  c_iso->add_option("--p0", f.p0, "first generating function (z-plane)");
  c_iso->add_option("--p0tilde", f.p0_tilde, "second generating function (w-plane)");
  c_iso->add_option("--zre", f.zre, "Re z(w) as a function of (u,v)");
  c_iso->add_option("--zim", f.zim, "Im z(w) as a function of (u,v)");
  add_common(c_iso, f);

  CLI::App* c_plot = app.add_subcommand("plot", "render a scalar field or grid");
  c_plot->add_option("--field", f.field, "expression to plot");
  c_plot->add_option("--grid-csv", f.grid_csv, "grid CSV to plot");
  c_plot->add_option("--format", f.format, "ppm | table");
  add_common(c_plot, f);

  CLI11_PARSE(app, argc, argv);

  sasaki::JobSpec job;
  CLI::App* cmd = nullptr;
  for (CLI::App* c : {c_build, c_verify, c_family, c_solve, c_conf, c_iso, c_plot})
    if (c->parsed()) cmd = c;

  try {
    if (cmd) {
      if (!f.job_file.empty()) job = sasaki::job_from_json_file(f.job_file);
      job.command = cmd->get_name();
      merge(cmd, f, job);
    } else if (!top_job.empty()) {
      job = sasaki::job_from_json_file(top_job);
    } else {
      std::cerr << app.help() << '\n';
      return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  const sasaki::RunReport rep = sasaki::run(job);
  std::cout << rep.json << '\n';
  return rep.exit_code;
}
