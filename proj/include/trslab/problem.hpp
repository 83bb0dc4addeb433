#pragma once

#include <functional>
#include <optional>
#include <variant>

#include "trslab/dense.hpp"
#include "trslab/types.hpp"

namespace trs {

/// Symmetric linear operator: dense matrix, diagonal, or a matrix-free
/// callback. Dense and diagonal forms expose their data for the exact
/// solver; the callback form supports the iterative path only.
class SymOperator {
 public:
  using Apply = std::function<Vector(const Vector&)>;

  static SymOperator dense(DenseSym a);
  static SymOperator diagonal(Vector d);
  static SymOperator callback(Apply apply, Index n);

  Index order() const;
  Vector apply(const Vector& x) const;

  bool is_dense() const { return std::holds_alternative<DenseSym>(rep_); }
  bool is_diagonal() const { return std::holds_alternative<Vector>(rep_); }
  const DenseSym& dense_matrix() const { return std::get<DenseSym>(rep_); }
  const Vector& diagonal_entries() const { return std::get<Vector>(rep_); }

 private:
  struct Callback {
    Apply fn;
    Index n;
  };
  std::variant<DenseSym, Vector, Callback> rep_;
  explicit SymOperator(std::variant<DenseSym, Vector, Callback> rep) : rep_(std::move(rep)) {}
};

struct TrsProblem {
  SymOperator a;
  Vector g;
  double delta;

  TrsProblem(SymOperator a_, Vector g_, double delta_);
  Index order() const { return a.order(); }
  double g_norm() const { return g.norm(); }
};

/// Translated Chebyshev zero nodes on (a, b), strictly decreasing.
Vector gen_chebyshev_diag(double a, double b, Index n);

/// Diagonal problem with Chebyshev-node spectrum on (a, b) and a seeded,
/// unit-normalized Gaussian gradient.
TrsProblem gen_example1(double a, double b, Index n, double delta, std::uint64_t seed);

/// Deterministic nearly-hard-case family of order 10001: the operator is a
/// Chebyshev-node diagonal on (1, 3000) with one detached eigenvalue 0.1,
/// shifted by -500. The multiplier of the exact solution is 500 for every
/// rho, while rho steers how hard the multiplier is to approximate.
TrsProblem gen_example2(double rho);

/// Closed-form data for gen_example2, usable as an independent oracle.
struct Example2Exact {
  double lambda_opt;  // always 500
  Vector x_opt;
  double delta;
  double s_opt;
  double kappa;
};
Example2Exact example2_exact(double rho);

}  // namespace trs
