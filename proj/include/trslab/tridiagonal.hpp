#pragma once

#include <utility>

#include "trslab/types.hpp"

namespace trs {

/// Symmetric tridiagonal matrix, stored as its diagonal (length k) and
/// off-diagonal (length k-1).
struct SymTridiagonal {
  Vector diag;
  Vector offdiag;

  SymTridiagonal() = default;
  SymTridiagonal(Vector d, Vector e);

  Index order() const { return diag.size(); }
  /// Leading principal k-by-k block.
  SymTridiagonal leading(Index k) const;
  /// y = (T + shift I) x
  Vector multiply(const Vector& x, double shift = 0.0) const;
  double inf_norm() const;
};

/// LDL^T factorization of T + shift I (no pivoting). Factoring reports
/// whether all pivots stay above 1e-14 * max|diag + shift|, which is how
/// positive definiteness is decided throughout.
class TridiagLdlt {
 public:
  bool factor(const SymTridiagonal& T, double shift);
  void solve_in_place(Vector& x) const;
  Vector solve(Vector rhs) const {
    solve_in_place(rhs);
    return rhs;
  }
  bool positive_definite() const { return pd_; }
  double min_pivot() const { return min_pivot_; }

 private:
  Vector d_, l_;
  double min_pivot_ = 0.0;
  bool pd_ = false;
};

/// (T + shift I)^{-power} rhs via successive LDL^T solves, one step of
/// iterative refinement each. Throws NotPositiveDefinite.
Vector tridiag_shift_solve(const SymTridiagonal& T, double shift, const Vector& rhs,
                           int power = 1);

/// Smallest and largest eigenvalues by Sturm-sequence bisection.
std::pair<double, double> tridiag_extreme_eigs(const SymTridiagonal& T);

/// Number of eigenvalues of T strictly below x.
Index tridiag_count_below(const SymTridiagonal& T, double x);

}  // namespace trs
