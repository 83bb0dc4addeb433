#pragma once

#include "trslab/problem.hpp"
#include "trslab/tridiagonal.hpp"

namespace trs {

struct LanczosOptions {
  /// Two-pass reorthogonalization of every new vector against the whole
  /// stored basis. Turning it off falls back to the plain three-term
  /// recurrence, which is faster but forfeits the orthogonality guarantees
  /// the bound evaluation relies on.
  bool full_reorth = true;
  double breakdown_rel_tol = 1e-13;
};

/// Growing Lanczos factorization A Q_k = Q_k T_k + beta_k q_{k+1} e_k^T with
/// q_1 = g / ||g||. Single-owner mutable value; snapshots of the basis and
/// tridiagonal may be shared read-only.
class LanczosFactorization {
 public:
  LanczosFactorization(const TrsProblem& problem, LanczosOptions opts = {});

  /// One more Lanczos step. Throws AlreadyBrokenDown.
  void extend(const TrsProblem& problem);

  Index k() const { return k_; }
  const SymTridiagonal& tridiag() const { return t_; }
  /// Off-diagonal beta_k coupling step k to the (k+1)-st direction.
  double beta_k() const { return beta_; }
  bool broke_down() const { return broke_down_; }
  double g_norm() const { return g_norm_; }
  /// n x k orthonormal basis.
  Eigen::Ref<const Matrix> basis() const { return q_.leftCols(k_); }
  Eigen::Ref<const Vector> column(Index j) const { return q_.col(j); }
  /// Candidate q_{k+1}; valid only while not broken down.
  const Vector& next_q() const { return next_q_; }

 private:
  void orthogonalize(Vector& w) const;
  void finish_step(Vector w);

  LanczosOptions opts_;
  Index n_ = 0;
  Index k_ = 0;
  double g_norm_ = 0.0;
  Matrix q_;  // n x capacity, first k_ columns valid
  SymTridiagonal t_;
  Vector next_q_;
  double beta_ = 0.0;
  bool broke_down_ = false;
};

LanczosFactorization lanczos_init(const TrsProblem& problem, LanczosOptions opts = {});

}  // namespace trs
