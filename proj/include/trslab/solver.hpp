#pragma once

#include <vector>

#include "trslab/lanczos.hpp"
#include "trslab/problem.hpp"
#include "trslab/tridiagonal.hpp"

namespace trs {

struct ReducedSolution {
  Vector h;
  double lambda = 0.0;
  bool boundary = false;
};

struct SecularOptions {
  int max_iters = 200;
  /// Accepts once | ||h|| - delta | falls below this times delta; the solve
  /// keeps polishing toward 1e-13 while Newton makes progress.
  double accept_rel_tol = 1e-10;
  double target_rel_tol = 1e-13;
};

/// More-Sorensen solve of min 1/2 h'Th + g_norm h_1 s.t. ||h|| <= delta:
/// interior solution when T is positive definite and the unconstrained
/// minimizer fits, else Newton iteration on 1/||h(lambda)|| - 1/delta,
/// safeguarded by bisection, for the boundary multiplier.
///
/// lambda_lower bounds the search from below; passing the multiplier of the
/// previous (nested) subproblem keeps the sequence monotone, which is exact
/// for nested tridiagonal blocks.
ReducedSolution solve_reduced_trs(const SymTridiagonal& T, double g_norm, double delta,
                                  double lambda_lower = 0.0, SecularOptions opts = {});

struct IterationRecord {
  Index k = 0;
  double lambda = 0.0;
  double x_norm = 0.0;
  double residual_norm = 0.0;  // beta_k |e_k' h_k|
  double f_value = 0.0;
  double beta = 0.0;
  bool boundary = false;
  double wall_time_s = 0.0;
};

struct GltrOptions {
  double tol_resid = 1e-10;  // relative to ||g||; 0 runs to breakdown
  Index k_max_cap = -1;      // <0 means the problem order
  bool reorth = true;
  /// Keep every reduced solution h_k; needed by the bound evaluation.
  bool keep_reduced = true;
};

struct GltrResult {
  Vector x;
  double lambda = 0.0;
  std::vector<IterationRecord> trace;
  bool converged = false;
  Index k_final = 0;
  LanczosFactorization fact;
  std::vector<Vector> h_history;  // empty unless keep_reduced

  const IterationRecord& final_record() const { return trace.back(); }
};

/// GLTR driver: extend the Lanczos basis, solve the reduced subproblem,
/// record the iteration, stop on the residual test, breakdown, or the cap.
GltrResult gltr_solve(const TrsProblem& problem, GltrOptions opts = {});

/// f(x) = 1/2 x'Ax + g'x.
double evaluate_f(const TrsProblem& problem, const Vector& x);

}  // namespace trs
