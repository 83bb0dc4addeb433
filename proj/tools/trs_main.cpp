#include <iostream>

#include <CLI11.hpp>

#include "trslab/commands.hpp"

namespace {

void add_problem_flags(CLI::App* cmd, trs::RunConfig& cfg) {
  cmd->add_option("--diag-json", cfg.diag_json, "diagonal problem file {diag, g, delta}");
  cmd->add_option("--mtx", cfg.mtx, "Matrix Market file with the symmetric operator");
  cmd->add_option("--g-file", cfg.g_file, "gradient vector file (with --mtx)");
  cmd->add_flag("--example1", cfg.example1, "Chebyshev-node diagonal with random gradient");
  cmd->add_flag("--example2", cfg.example2, "deterministic detached-eigenvalue family");
  cmd->add_option("--a", cfg.a, "spectrum interval left end (example1)");
  cmd->add_option("--b", cfg.b, "spectrum interval right end (example1)");
  cmd->add_option("--n", cfg.n, "problem size (example1)");
  auto* delta_opt =
      cmd->add_option("--delta", cfg.delta, "trust-region radius (example1, --mtx)");
  delta_opt->each([&cfg](const std::string&) { cfg.delta_set = true; });
  cmd->add_option("--seed", cfg.seed, "gradient seed (example1)");
  cmd->add_option("--rho", cfg.rho, "tail weight (example2)");
}

void add_solver_flags(CLI::App* cmd, trs::RunConfig& cfg) {
  cmd->add_option("--tol", cfg.tol_resid, "relative residual stopping tolerance");
  cmd->add_option("--k-max", cfg.k_max, "iteration cap (default: problem order)");
  cmd->add_flag("--no-reorth{false}", cfg.reorth, "disable full reorthogonalization");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trust-region subproblem lab: GLTR solver, exact oracle, convergence bounds"};
  app.require_subcommand(1);

  trs::RunConfig cfg;

  auto* solve = app.add_subcommand("solve", "run GLTR and write the iteration trace");
  add_problem_flags(solve, cfg);
  add_solver_flags(solve, cfg);
  solve->add_option("--out", cfg.out, "trace output path (default: stdout)");
  solve->add_option("--format", cfg.format, "trace format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  solve->add_flag("--timing", cfg.timing, "record wall-clock times in the trace");

  auto* trace = app.add_subcommand(
      "trace-bounds", "solve, run the oracle, and evaluate every bound per iteration");
  add_problem_flags(trace, cfg);
  add_solver_flags(trace, cfg);
  trace->add_option("--out", cfg.out, "bound report CSV path (default: stdout)");
  trace->add_option("--json-out", cfg.json_out, "problem summary JSON path (default: stdout)");
  trace->add_option("--sep", cfg.sep_mode, "spectral-separation diagnostic: off, final or all")
      ->check(CLI::IsMember({"off", "final", "all"}));
  trace->add_option("--exact-actuals", cfg.exact_actuals,
                    "form x_k explicitly for the error actuals: auto, on or off")
      ->check(CLI::IsMember({"auto", "on", "off"}));

  auto* table = app.add_subcommand("table", "reference tables over the built-in families");
  table->add_option("--mode", cfg.table_mode,
                    "1: spectrum sweep, 2: same rows for s/cond, 3: rho sweep")
      ->check(CLI::IsMember({1, 2, 3}));
  table->add_option("--n", cfg.n, "problem size for the spectrum sweep");
  table->add_option("--seed", cfg.seed, "gradient seed for the spectrum sweep");
  add_solver_flags(table, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : trs::kExitParse;
  }

  if (solve->parsed()) return trs::run_solve(cfg, std::cout, std::cerr);
  if (trace->parsed()) return trs::run_trace_bounds(cfg, std::cout, std::cerr);
  return trs::run_table(cfg, std::cout, std::cerr);
}
