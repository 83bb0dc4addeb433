#pragma once

#include <optional>
#include <utility>

#include "trslab/problem.hpp"

namespace trs {

enum class TrsCase { Interior, EasyBoundary, HardCase };

/// Ground-truth solution of the full problem, available for dense (small)
/// and diagonal operators. kappa and a_opt_norm refer to A + lambda_opt I.
struct ExactSolution {
  double lambda_opt = 0.0;
  Vector x_opt;
  TrsCase which = TrsCase::Interior;
  double alpha_1 = 0.0;
  double alpha_n = 0.0;
  double kappa = 0.0;
  double a_opt_norm = 0.0;

  // Spectral data kept for downstream evaluations: eigenvalues in the basis
  // order of `basis` (identity for diagonal operators).
  Vector eigenvalues;
  std::optional<Matrix> basis;
  Vector g_spec;  // gradient coordinates in the eigenbasis

  bool boundary() const { return which == TrsCase::EasyBoundary; }
  /// (A + lambda_opt I)^{-p} v.
  Vector apply_shifted_inverse(const Vector& v, int power = 1) const;
};

/// Eigendecompose (or read off the diagonal), classify interior / boundary /
/// hard case, and solve the secular equation for the boundary multiplier.
ExactSolution classify_and_solve(const TrsProblem& problem, Index dense_limit = 2000);

/// Unit eigenvector (y1, y2) of the rightmost eigenvalue of the 2n x 2n
/// block matrix pairing the problem with its multiplier, built from closed
/// forms (y1 ~ x_opt, y2 ~ A_opt^{-1} x_opt) without forming the matrix;
/// sign fixed so g'y2 < 0. Boundary case only.
std::pair<Vector, Vector> eigvec_of_M(const ExactSolution& exact, const TrsProblem& problem);

/// s(lambda_opt) = ||A_opt^{-1}x_opt|| ||g|| / (g'A_opt^{-3}g) and the
/// multiplier condition number 1/(2|y1'y2|). Boundary case only.
std::pair<double, double> s_and_cond_of_lambda(const ExactSolution& exact,
                                               const TrsProblem& problem);

}  // namespace trs
