#include "trslab/lanczos.hpp"

#include <cmath>

namespace trs {

LanczosFactorization::LanczosFactorization(const TrsProblem& problem, LanczosOptions opts)
    : opts_(opts), n_(problem.order()) {
  g_norm_ = problem.g.norm();
  if (g_norm_ == 0.0) throw ZeroGradient("lanczos: zero gradient");
  q_.resize(n_, std::min<Index>(n_, 16));
  q_.col(0) = problem.g / g_norm_;
  k_ = 1;
  t_.diag.resize(1);
  t_.offdiag.resize(0);

  Vector w = problem.a.apply(q_.col(0));
  const double delta1 = q_.col(0).dot(w);
  t_.diag[0] = delta1;
  w -= delta1 * q_.col(0);
  finish_step(std::move(w));
}

void LanczosFactorization::orthogonalize(Vector& w) const {
  const auto qk = q_.leftCols(k_);
  for (int pass = 0; pass < 2; ++pass) w.noalias() -= qk * (qk.transpose() * w);
}

void LanczosFactorization::finish_step(Vector w) {
  if (opts_.full_reorth) orthogonalize(w);
  beta_ = w.norm();
  const double tol = opts_.breakdown_rel_tol * (t_.inf_norm() + 1.0);
  if (beta_ <= tol || k_ == n_) {
    broke_down_ = true;
    next_q_.resize(0);
    return;
  }
  next_q_ = w / beta_;
}

void LanczosFactorization::extend(const TrsProblem& problem) {
  if (broke_down_) throw AlreadyBrokenDown("lanczos: factorization already broke down");
  if (k_ == q_.cols()) {
    Matrix grown(n_, std::min<Index>(n_, 2 * q_.cols()));
    grown.leftCols(k_) = q_.leftCols(k_);
    q_.swap(grown);
  }
  q_.col(k_) = next_q_;
  const Index prev = k_ - 1;
  ++k_;

  Vector w = problem.a.apply(q_.col(k_ - 1));
  w -= beta_ * q_.col(prev);
  const double delta = q_.col(k_ - 1).dot(w);
  w -= delta * q_.col(k_ - 1);

  t_.diag.conservativeResize(k_);
  t_.diag[k_ - 1] = delta;
  t_.offdiag.conservativeResize(k_ - 1);
  t_.offdiag[k_ - 2] = beta_;

  finish_step(std::move(w));
}

LanczosFactorization lanczos_init(const TrsProblem& problem, LanczosOptions opts) {
  return LanczosFactorization(problem, opts);
}

}  // namespace trs
