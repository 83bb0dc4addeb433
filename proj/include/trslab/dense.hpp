#pragma once

#include "trslab/types.hpp"

namespace trs {

/// Dense symmetric matrix; writes through set() mirror both triangles so the
/// stored matrix is exactly symmetric.
class DenseSym {
 public:
  explicit DenseSym(Index n) : m_(Matrix::Zero(n, n)) {}

  /// Adopts a full matrix, requiring |m(i,j) - m(j,i)| <= tol * max|m|.
  static DenseSym from_matrix(const Matrix& m, double tol = 1e-13);

  Index order() const { return m_.rows(); }
  double operator()(Index i, Index j) const { return m_(i, j); }
  void set(Index i, Index j, double v) {
    m_(i, j) = v;
    m_(j, i) = v;
  }
  void add(Index i, Index j, double v) { set(i, j, m_(i, j) + v); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

struct EighResult {
  Vector values;   // descending
  Matrix vectors;  // columns match values
  int sweeps = 0;
};

/// Cyclic Jacobi eigensolver; iterates until the off-diagonal Frobenius mass
/// drops below 1e-13 * ||A||_F. Throws NoConvergence past max_sweeps.
EighResult dense_eigh(const DenseSym& A, int max_sweeps = 64);

/// Smallest singular value via inverse power iteration on B^T B. Returns 0
/// when B is singular to working precision.
double sigma_min(const Matrix& B);

/// Householder reflector taking z to a multiple of e_1; H is symmetric and
/// involutive, applied in O(m) per vector.
class Householder {
 public:
  explicit Householder(const Vector& z);
  Index dim() const { return v_.size(); }
  Vector apply(const Vector& x) const;

 private:
  Vector v_;
  double vtv_;
};

/// Orthonormal basis of the complement of span{z}, m x (m-1), built from one
/// Householder reflector. Throws ZeroVector.
Matrix complement_basis(const Vector& z);

}  // namespace trs
