#include "trslab/solver.hpp"

#include <chrono>
#include <cmath>
#include <limits>

namespace trs {

namespace {

Vector neg_grad_e1(Index k, double g_norm) {
  Vector rhs = Vector::Zero(k);
  rhs[0] = -g_norm;
  return rhs;
}

}  // namespace

ReducedSolution solve_reduced_trs(const SymTridiagonal& T, double g_norm, double delta,
                                  double lambda_lower, SecularOptions opts) {
  if (!(g_norm > 0.0)) throw ZeroGradient("reduced trs: g_norm must be positive");
  if (!(delta > 0.0)) throw Error("reduced trs: delta must be positive");
  const Index k = T.order();
  const Vector rhs = neg_grad_e1(k, g_norm);

  TridiagLdlt ldlt;
  if (lambda_lower <= 0.0 && ldlt.factor(T, 0.0)) {
    Vector h = ldlt.solve(rhs);
    if (h.norm() <= delta) return {std::move(h), 0.0, false};
  }

  const auto [theta_min, theta_max] = tridiag_extreme_eigs(T);
  double lo = std::max({0.0, -theta_min, lambda_lower});
  // ||h(lambda)|| <= g_norm/(theta_min+lambda), so this upper end is feasible.
  double hi = std::max(lo, g_norm / delta - theta_min);
  const double span = std::max({1.0, std::abs(theta_min), std::abs(theta_max)});
  hi += 1e-3 * span;

  // Warm-started floor: the boundary multiplier of the nested subproblem
  // never drops, so if the previous multiplier already puts h inside the
  // ball the root sits at the floor to within the noise of that estimate.
  if (lambda_lower > 0.0 && lo == lambda_lower) {
    if (ldlt.factor(T, lo) ||
        ldlt.factor(T, lo + 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + lo))) {
      Vector h = ldlt.solve(rhs);
      if (h.norm() <= delta) return {std::move(h), lo, true};
    }
  }

  Vector h;
  double lambda = std::max(lo + 0.5 * (hi - lo), lambda_lower);
  double best_err = std::numeric_limits<double>::infinity();
  Vector best_h;
  double best_lambda = lambda;

  for (int it = 0; it < opts.max_iters; ++it) {
    if (!ldlt.factor(T, lambda)) {
      lo = lambda;
      lambda = 0.5 * (lo + hi);
      continue;
    }
    h = ldlt.solve(rhs);
    const double nh = h.norm();
    const double err = std::abs(nh - delta);
    if (err < best_err) {
      best_err = err;
      best_h = h;
      best_lambda = lambda;
    }
    if (err <= opts.target_rel_tol * delta) break;

    if (nh > delta)
      lo = lambda;
    else
      hi = lambda;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + hi))
      break;  // bracket collapsed to machine width
    // Newton step on phi(lambda) = 1/||h|| - 1/delta.
    Vector u = ldlt.solve(h);
    const double dphi = h.dot(u) / (nh * nh * nh);
    const double phi = 1.0 / nh - 1.0 / delta;
    double next = lambda - phi / dphi;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == lambda) break;  // stalled at floating-point resolution
    lambda = next;
  }

  if (best_err > opts.accept_rel_tol * delta)
    throw MaxSecularIterations(
        "reduced trs: secular iteration did not reach tolerance (the subproblem is "
        "numerically in the hard case)");
  best_lambda = std::max(best_lambda, lambda_lower);
  return {std::move(best_h), best_lambda, true};
}

double evaluate_f(const TrsProblem& problem, const Vector& x) {
  if (x.size() != problem.order()) throw DimensionMismatch("evaluate_f: size mismatch");
  return 0.5 * x.dot(problem.a.apply(x)) + problem.g.dot(x);
}

GltrResult gltr_solve(const TrsProblem& problem, GltrOptions opts) {
  const Index n = problem.order();
  const Index cap = opts.k_max_cap < 0 ? n : std::min(opts.k_max_cap, n);
  const double g_norm = problem.g_norm();

  LanczosOptions lopts;
  lopts.full_reorth = opts.reorth;
  GltrResult res{Vector(), 0.0, {}, false, 0, LanczosFactorization(problem, lopts), {}};
  auto& fact = res.fact;

  const auto t0 = std::chrono::steady_clock::now();
  double lambda_prev = 0.0;
  Vector h;
  while (true) {
    const Index k = fact.k();
    // The floor is backed off by a couple of ulps so every root is located
    // afresh; estimate errors then cannot ratchet upward across iterations.
    const double floor =
        lambda_prev <= 0.0
            ? 0.0
            : lambda_prev - 2.0 * std::numeric_limits<double>::epsilon() * (1.0 + lambda_prev);
    ReducedSolution red = solve_reduced_trs(fact.tridiag(), g_norm, problem.delta, floor);
    lambda_prev = std::max(lambda_prev, red.lambda);
    h = std::move(red.h);

    IterationRecord rec;
    rec.k = k;
    rec.lambda = lambda_prev;
    rec.x_norm = h.norm();
    rec.beta = fact.beta_k();
    rec.residual_norm = fact.beta_k() * std::abs(h[k - 1]);
    // f in the reduced coordinates: Q_k'g = ||g|| e_1.
    rec.f_value = 0.5 * h.dot(fact.tridiag().multiply(h)) + g_norm * h[0];
    rec.boundary = red.boundary;
    rec.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.trace.push_back(rec);
    if (opts.keep_reduced) res.h_history.push_back(h);

    const bool resid_ok = rec.residual_norm <= opts.tol_resid * g_norm;
    if (resid_ok || fact.broke_down()) {
      res.converged = true;
      break;
    }
    if (k >= cap) break;
    fact.extend(problem);
  }

  res.k_final = fact.k();
  res.lambda = res.trace.back().lambda;
  res.x.noalias() = fact.basis() * h;
  return res;
}

}  // namespace trs
