#pragma once

#include <optional>
#include <string>

#include "trslab/bounds.hpp"

namespace trs {

/// Exit codes shared by every subcommand.
enum ExitCode {
  kExitOk = 0,
  kExitParse = 1,
  kExitSolver = 2,
  kExitIo = 3,
  kExitOracleIneligible = 4,
};

struct RunConfig {
  // problem source: exactly one of these
  std::optional<std::string> diag_json;
  std::optional<std::string> mtx;
  bool example1 = false;
  bool example2 = false;

  // example parameters
  double a = -5.0, b = 5.0;
  Index n = 10000;
  double delta = 1.0;
  std::uint64_t seed = 42;
  double rho = 1e-8;

  // matrix-market companions
  std::optional<std::string> g_file;
  bool delta_set = false;  // --delta given explicitly (required with --mtx)

  // solver
  double tol_resid = 1e-10;
  Index k_max = -1;
  bool reorth = true;

  // output
  std::optional<std::string> out;
  std::optional<std::string> json_out;
  bool timing = false;
  std::string format = "csv";
  std::string sep_mode = "off";         // off | final | all
  std::string exact_actuals = "auto";   // auto | on | off

  // table
  int table_mode = 1;
};

TrsProblem make_problem(const RunConfig& cfg);

int run_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_trace_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_table(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace trs
