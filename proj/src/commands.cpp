#include "trslab/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "trslab/problem_io.hpp"
#include "trslab/report.hpp"

namespace trs {

namespace {

int count_sources(const RunConfig& cfg) {
  return int(cfg.diag_json.has_value()) + int(cfg.mtx.has_value()) + int(cfg.example1) +
         int(cfg.example2);
}

GltrOptions solver_options(const RunConfig& cfg) {
  GltrOptions o;
  o.tol_resid = cfg.tol_resid;
  o.k_max_cap = cfg.k_max;
  o.reorth = cfg.reorth;
  return o;
}

struct StreamOrFile {
  std::ofstream file;
  std::ostream* os = nullptr;
  StreamOrFile(const std::optional<std::string>& path, std::ostream& fallback) {
    if (path) {
      file.open(*path);
      if (!file) throw IoError("cannot write file: " + *path);
      os = &file;
    } else {
      os = &fallback;
    }
  }
};

int map_error(const std::exception& e, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  if (dynamic_cast<const IoError*>(&e)) return kExitIo;
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const AsymmetricMatrix*>(&e) ||
      dynamic_cast<const DimensionMismatch*>(&e) || dynamic_cast<const InvalidInterval*>(&e))
    return kExitParse;
  if (dynamic_cast<const DenseTooLarge*>(&e)) return kExitOracleIneligible;
  return kExitSolver;
}

}  // namespace

TrsProblem make_problem(const RunConfig& cfg) {
  if (count_sources(cfg) != 1) throw ParseError("exactly one problem source required");
  if (cfg.diag_json) return load_problem(*cfg.diag_json, ProblemFormat::DiagJson);
  if (cfg.mtx) {
    std::optional<std::filesystem::path> gp;
    if (cfg.g_file) gp = *cfg.g_file;
    std::optional<double> delta;
    if (cfg.delta_set) delta = cfg.delta;
    return load_problem(*cfg.mtx, ProblemFormat::MatrixMarket, gp, delta);
  }
  if (cfg.example1) return gen_example1(cfg.a, cfg.b, cfg.n, cfg.delta, cfg.seed);
  return gen_example2(cfg.rho);
}

int run_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    TrsProblem problem = make_problem(cfg);
    GltrOptions opts = solver_options(cfg);
    opts.keep_reduced = false;
    GltrResult res = gltr_solve(problem, opts);

    if (cfg.format == "json") {
      StreamOrFile sink(cfg.out, out);
      nlohmann::json records = nlohmann::json::array();
      for (const auto& r : res.trace)
        records.push_back({{"k", r.k},
                           {"lambda", r.lambda},
                           {"x_norm", r.x_norm},
                           {"resid", r.residual_norm},
                           {"f", r.f_value},
                           {"beta", r.beta},
                           {"boundary", r.boundary},
                           {"time_ms", cfg.timing ? r.wall_time_s * 1e3 : 0.0}});
      *sink.os << records.dump(2) << '\n';
    } else {
      StreamOrFile sink(cfg.out, out);
      write_solve_csv(*sink.os, res, cfg.timing);
    }
    const double resid_explicit =
        (problem.a.apply(res.x) + res.lambda * res.x + problem.g).norm();
    char line[256];
    std::snprintf(line, sizeof(line),
                  "k_final=%lld lambda=%.9f x_norm=%.9e resid=%.6e converged=%d\n",
                  static_cast<long long>(res.k_final), res.lambda, res.x.norm(),
                  resid_explicit, res.converged ? 1 : 0);
    out << line;
    return res.converged ? kExitOk : kExitSolver;
  } catch (const std::exception& e) {
    return map_error(e, err);
  }
}

namespace {

BoundsOptions bounds_options(const RunConfig& cfg, const TrsProblem& problem, Index k_final) {
  BoundsOptions b;
  if (cfg.sep_mode == "all")
    b.sep = BoundsOptions::SepMode::All;
  else if (cfg.sep_mode == "final")
    b.sep = BoundsOptions::SepMode::FinalOnly;
  else
    b.sep = BoundsOptions::SepMode::Off;
  if (cfg.exact_actuals == "on")
    b.exact_actuals = true;
  else if (cfg.exact_actuals == "off")
    b.exact_actuals = false;
  else  // auto: stay exact unless the run is too large for O(n k^2) work
    b.exact_actuals = problem.order() * k_final * k_final < Index(4) << 30;
  return b;
}

}  // namespace

int run_trace_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    TrsProblem problem = make_problem(cfg);
    if (!problem.a.is_diagonal() && !problem.a.is_dense()) {
      err << "error: bound tracing needs a dense or diagonal operator\n";
      return kExitOracleIneligible;
    }
    ExactSolution exact = classify_and_solve(problem);
    GltrResult res = gltr_solve(problem, solver_options(cfg));
    BoundTrace trace = evaluate_bounds(problem, exact, res, bounds_options(cfg, problem, res.k_final));

    {
      StreamOrFile sink(cfg.out, out);
      write_bounds_csv(*sink.os, trace);
    }
    {
      StreamOrFile sink(cfg.json_out, out);
      write_summary_json(*sink.os, trace);
    }
    return kExitOk;
  } catch (const std::exception& e) {
    return map_error(e, err);
  }
}

namespace {

struct TableRow {
  std::string label;
  double lambda_opt, x_opt_norm, resid_final, kappa, s_opt, cond_opt;
};

TableRow table_row_for(const TrsProblem& problem, const std::string& label,
                       const RunConfig& cfg) {
  ExactSolution exact = classify_and_solve(problem);
  GltrOptions opts = solver_options(cfg);
  opts.keep_reduced = false;
  GltrResult res = gltr_solve(problem, opts);
  const double resid = (problem.a.apply(res.x) + res.lambda * res.x + problem.g).norm();
  double s = std::nan(""), cond = std::nan("");
  if (exact.boundary()) std::tie(s, cond) = s_and_cond_of_lambda(exact, problem);
  return {label, exact.lambda_opt, exact.x_opt.norm(), resid, exact.kappa, s, cond};
}

}  // namespace

int run_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    struct Job {
      std::string label;
      std::function<TrsProblem()> make;
    };
    std::vector<Job> jobs;
    if (cfg.table_mode == 1 || cfg.table_mode == 2) {
      const double as[] = {-5, -10, -50, -100};
      const double bs[] = {5, 10, 50, 100};
      const double deltas[] = {1, 10, 15, 20};
      for (int i = 0; i < 4; ++i) {
        std::ostringstream lab;
        lab << "[" << as[i] << "," << bs[i] << "] delta=" << deltas[i];
        const double a = as[i], b = bs[i], d = deltas[i];
        const Index n = cfg.n;
        const auto seed = cfg.seed;
        jobs.push_back({lab.str(), [=] { return gen_example1(a, b, n, d, seed); }});
      }
    } else if (cfg.table_mode == 3) {
      for (double rho : {1e-10, 1e-8, 1e-6, 1e-4}) {
        std::ostringstream lab;
        lab << "rho=" << rho;
        jobs.push_back({lab.str(), [=] { return gen_example2(rho); }});
      }
    } else {
      throw ParseError("table mode must be 1, 2 or 3");
    }

    std::vector<std::future<TableRow>> futures;
    futures.reserve(jobs.size());
    for (const auto& job : jobs)
      futures.push_back(std::async(std::launch::async, [&cfg, job] {
        return table_row_for(job.make(), job.label, cfg);
      }));

    char line[256];
    std::snprintf(line, sizeof(line), "%-26s %14s %12s %12s %12s %12s %12s\n", "problem",
                  "lambda_opt", "x_opt_norm", "resid", "kappa", "s_opt", "cond_opt");
    out << line;
    for (auto& f : futures) {
      const TableRow r = f.get();
      std::snprintf(line, sizeof(line),
                    "%-26s %14.6f %12.4e %12.4e %12.4e %12.4e %12.4e\n", r.label.c_str(),
                    r.lambda_opt, r.x_opt_norm, r.resid_final, r.kappa, r.s_opt, r.cond_opt);
      out << line;
    }
    return kExitOk;
  } catch (const std::exception& e) {
    return map_error(e, err);
  }
}

}  // namespace trs
