#pragma once

// Job-level workflows behind the command-line tool: build / verify / family /
// solve / conformal / isometry / plot.  A JobSpec comes either from flags or
// from a JSON job file; run() executes it and produces a JSON report with the
// fixed schema {command, inputs, residuals, verdict, runtime_ms}.
//
// Exit codes: 0 pass, 1 verification or convergence failure, 2 usage error.

#include <array>
#include <string>

namespace sasaki {

struct JobSpec {
  std::string command;

  std::string p0;        // generating-function expression
  std::string p0_tilde;  // second generating function (isometry)
  std::string R;         // curvature-target expression (solve)
  std::string boundary;  // boundary expression (solve)
  std::string field;     // plotted expression (plot)
  std::string zre, zim;  // holomorphic map components (isometry)

  std::array<double, 4> domain{-1.0, 1.0, -1.0, 1.0};
  bool domain_set = false;
  int grid = 65;
  int samples = 100;
  unsigned seed = 20260809;
  double W = 0.0;
  bool W_set = false;
  double tol = -1.0;  // < 0: per-command default
  double v0 = 0.0;
  bool v0_set = false;

  std::string out;             // output path or prefix
  std::string format = "ppm";  // plot format: ppm | table
  std::string grid_csv;        // plot input grid (alternative to field)
  std::string report_path;     // optional report copy
};

struct RunReport {
  int exit_code = 2;
  std::string verdict;  // pass | fail | error
  std::string json;
};

// Never throws; errors are folded into the report and the exit code.
RunReport run(const JobSpec& job);

// Reads a JSON job file (keys mirror the flag names).  Throws DomainError /
// ParseError on malformed files.
JobSpec job_from_json_file(const std::string& path);

}  // namespace sasaki
