#include "trslab/oracle.hpp"

#include <cmath>
#include <limits>

namespace trs {

namespace {

constexpr double kHardCaseOrthTol = 1e-12;

// ||x(lambda)||^2 with x(lambda) = -(A + lambda I)^{-1} g in the eigenbasis.
double xnorm2(const Vector& alpha, const Vector& w2, double lambda) {
  double s = 0.0;
  for (Index i = 0; i < alpha.size(); ++i) {
    const double den = alpha[i] + lambda;
    s += w2[i] / (den * den);
  }
  return s;
}

double dxnorm2(const Vector& alpha, const Vector& w2, double lambda) {
  double s = 0.0;
  for (Index i = 0; i < alpha.size(); ++i) {
    const double den = alpha[i] + lambda;
    s += w2[i] / (den * den * den);
  }
  return -2.0 * s;
}

}  // namespace

Vector ExactSolution::apply_shifted_inverse(const Vector& v, int power) const {
  Vector coeff = basis ? Vector(basis->transpose() * v) : v;
  for (Index i = 0; i < coeff.size(); ++i)
    coeff[i] /= std::pow(eigenvalues[i] + lambda_opt, power);
  return basis ? Vector(*basis * coeff) : coeff;
}

ExactSolution classify_and_solve(const TrsProblem& problem, Index dense_limit) {
  ExactSolution sol;
  const double g_norm = problem.g_norm();
  const double delta = problem.delta;

  if (problem.a.is_diagonal()) {
    sol.eigenvalues = problem.a.diagonal_entries();
    sol.g_spec = problem.g;
  } else if (problem.a.is_dense()) {
    if (problem.order() > dense_limit)
      throw DenseTooLarge("oracle: dense operator exceeds the size limit");
    EighResult eig = dense_eigh(problem.a.dense_matrix());
    sol.eigenvalues = eig.values;
    sol.basis = std::move(eig.vectors);
    sol.g_spec = sol.basis->transpose() * problem.g;
  } else {
    throw Error("oracle: matrix-free operators are not supported");
  }

  const Vector& alpha = sol.eigenvalues;
  sol.alpha_1 = alpha.maxCoeff();
  sol.alpha_n = alpha.minCoeff();
  const Vector w2 = sol.g_spec.cwiseAbs2();

  auto finish = [&](double lambda, TrsCase which, Vector x_spec) {
    sol.lambda_opt = lambda;
    sol.which = which;
    sol.x_opt = sol.basis ? Vector(*sol.basis * x_spec) : std::move(x_spec);
    const double bottom = sol.alpha_n + lambda;
    sol.kappa = bottom > 0.0 ? (sol.alpha_1 + lambda) / bottom
                             : std::numeric_limits<double>::infinity();
    sol.a_opt_norm = sol.alpha_1 + lambda;
  };

  // Interior: A positive definite and the Newton point inside the ball.
  if (sol.alpha_n > 0.0 && xnorm2(alpha, w2, 0.0) <= delta * delta) {
    Vector x = -sol.g_spec.cwiseQuotient(alpha);
    finish(0.0, TrsCase::Interior, std::move(x));
    return sol;
  }

  const double lambda_lo = std::max(0.0, -sol.alpha_n);
  // Norm of the minimum-norm stationary point at the lower multiplier limit,
  // dropping components in the bottom eigenspace that are orthogonal to
  // working precision.
  bool g_orth_bottom = true;
  double limit_norm2 = 0.0;
  const double bottom_band = 1e-12 * std::max(std::abs(sol.alpha_1), std::abs(sol.alpha_n));
  for (Index i = 0; i < alpha.size(); ++i) {
    const double den = alpha[i] + lambda_lo;
    if (den <= bottom_band) {
      if (std::abs(sol.g_spec[i]) > kHardCaseOrthTol * g_norm) g_orth_bottom = false;
    } else {
      limit_norm2 += w2[i] / (den * den);
    }
  }

  if (g_orth_bottom && limit_norm2 <= delta * delta) {
    // g is orthogonal to the bottom eigenspace and the minimum-norm point
    // fits: the hard case when the multiplier is pinned at -alpha_n > 0,
    // a degenerate interior solution when alpha_n = 0. No boundary
    // completion is attempted.
    Vector x = Vector::Zero(alpha.size());
    for (Index i = 0; i < alpha.size(); ++i) {
      const double den = alpha[i] + lambda_lo;
      if (den > bottom_band) x[i] = -sol.g_spec[i] / den;
    }
    finish(lambda_lo, lambda_lo > 0.0 ? TrsCase::HardCase : TrsCase::Interior, std::move(x));
    return sol;
  }

  // Easy boundary: Newton on 1/||x(lambda)|| - 1/delta with bisection
  // safeguards, bracketed on (lambda_lo, inf).
  double lo = lambda_lo;
  double hi = std::max(lo, g_norm / delta - sol.alpha_n) + 1e-3 * (1.0 + std::abs(sol.alpha_1));
  double lambda = lo + 0.5 * (hi - lo);
  double best_err = std::numeric_limits<double>::infinity();
  double best_lambda = lambda;
  for (int it = 0; it < 300; ++it) {
    const double nx2 = xnorm2(alpha, w2, lambda);
    const double nx = std::sqrt(nx2);
    const double err = std::abs(nx - delta);
    if (err < best_err) {
      best_err = err;
      best_lambda = lambda;
    }
    if (err <= 1e-12 * delta) break;
    if (nx > delta)
      lo = lambda;
    else
      hi = lambda;
    const double dnx = dxnorm2(alpha, w2, lambda) / (2.0 * nx);
    const double phi = 1.0 / nx - 1.0 / delta;
    const double dphi = -dnx / nx2;
    double next = lambda - phi / dphi;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == lambda) break;
    lambda = next;
  }
  if (best_err > 1e-9 * delta)
    throw MaxSecularIterations("oracle: secular iteration did not converge");

  Vector x(alpha.size());
  for (Index i = 0; i < alpha.size(); ++i) x[i] = -sol.g_spec[i] / (alpha[i] + best_lambda);
  finish(best_lambda, TrsCase::EasyBoundary, std::move(x));
  return sol;
}

std::pair<Vector, Vector> eigvec_of_M(const ExactSolution& exact, const TrsProblem& problem) {
  if (!exact.boundary()) throw NotBoundaryCase("eigvec_of_M: boundary case required");
  Vector y1 = exact.x_opt;
  Vector y2 = exact.apply_shifted_inverse(exact.x_opt);
  const double scale = std::sqrt(y1.squaredNorm() + y2.squaredNorm());
  y1 /= scale;
  y2 /= scale;
  if (problem.g.dot(y2) > 0.0) {
    y1 = -y1;
    y2 = -y2;
  }
  return {std::move(y1), std::move(y2)};
}

std::pair<double, double> s_and_cond_of_lambda(const ExactSolution& exact,
                                               const TrsProblem& problem) {
  if (!exact.boundary()) throw NotBoundaryCase("s_and_cond_of_lambda: boundary case required");
  const Vector ainv_x = exact.apply_shifted_inverse(exact.x_opt);
  const Vector ainv3_g = exact.apply_shifted_inverse(problem.g, 3);
  const double s = ainv_x.norm() * problem.g_norm() / problem.g.dot(ainv3_g);
  const auto [y1, y2] = eigvec_of_M(exact, problem);
  const double cond = 0.5 / std::abs(y1.dot(y2));
  return {s, cond};
}

}  // namespace trs
