#include "trslab/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "trslab/rng.hpp"

namespace trs {

DenseSym DenseSym::from_matrix(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw DimensionMismatch("DenseSym: matrix must be square");
  const double scale = m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol * std::max(scale, 1.0))
    throw AsymmetricMatrix("DenseSym: matrix is not symmetric");
  DenseSym a(m.rows());
  a.m_ = 0.5 * (m + m.transpose());
  return a;
}

namespace {

double offdiag_frobenius(const Matrix& b) {
  double s = 0.0;
  for (Index q = 0; q < b.cols(); ++q)
    for (Index p = 0; p < q; ++p) s += b(p, q) * b(p, q);
  return std::sqrt(2.0 * s);
}

}  // namespace

EighResult dense_eigh(const DenseSym& A, int max_sweeps) {
  const Index n = A.order();
  Matrix b = A.matrix();
  Matrix v = Matrix::Identity(n, n);
  const double norm_f = b.norm();
  const double stop = 1e-13 * norm_f;

  int sweep = 0;
  if (n > 1) {
    for (; sweep < max_sweeps; ++sweep) {
      if (offdiag_frobenius(b) <= stop) break;
      for (Index p = 0; p < n - 1; ++p) {
        for (Index q = p + 1; q < n; ++q) {
          const double apq = b(p, q);
          if (apq == 0.0) continue;
          const double tau = (b(q, q) - b(p, p)) / (2.0 * apq);
          const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          for (Index i = 0; i < n; ++i) {
            const double bip = b(i, p), biq = b(i, q);
            b(i, p) = c * bip - s * biq;
            b(i, q) = s * bip + c * biq;
          }
          for (Index i = 0; i < n; ++i) {
            const double bpi = b(p, i), bqi = b(q, i);
            b(p, i) = c * bpi - s * bqi;
            b(q, i) = s * bpi + c * bqi;
          }
          for (Index i = 0; i < n; ++i) {
            const double vip = v(i, p), viq = v(i, q);
            v(i, p) = c * vip - s * viq;
            v(i, q) = s * vip + c * viq;
          }
        }
      }
    }
    if (offdiag_frobenius(b) > stop)
      throw NoConvergence("dense_eigh: Jacobi sweeps exhausted");
  }

  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(),
            [&](Index i, Index j) { return b(i, i) > b(j, j); });
  EighResult r;
  r.values.resize(n);
  r.vectors.resize(n, n);
  for (Index j = 0; j < n; ++j) {
    r.values[j] = b(order[j], order[j]);
    r.vectors.col(j) = v.col(order[j]);
  }
  r.sweeps = sweep;
  return r;
}

double sigma_min(const Matrix& B) {
  if (B.rows() != B.cols()) throw DimensionMismatch("sigma_min: matrix must be square");
  const Index n = B.rows();
  if (n == 0) return 0.0;
  Matrix c = B.transpose() * B;

  // Cholesky with a singularity threshold.
  Matrix l = Matrix::Zero(n, n);
  const double dmax = c.diagonal().maxCoeff();
  const double tol = static_cast<double>(n) * 1e-15 * std::max(dmax, 0.0);
  for (Index j = 0; j < n; ++j) {
    double piv = c(j, j) - l.row(j).head(j).squaredNorm();
    if (piv <= tol) return 0.0;
    l(j, j) = std::sqrt(piv);
    for (Index i = j + 1; i < n; ++i)
      l(i, j) = (c(i, j) - l.row(i).head(j).dot(l.row(j).head(j))) / l(j, j);
  }

  Rng rng(0x5eed);
  Vector x = rng.normal_vector(n);
  x.normalize();
  double lam = 0.0;
  for (int it = 0; it < 500; ++it) {
    Vector w = l.triangularView<Eigen::Lower>().solve(x);
    l.transpose().triangularView<Eigen::Upper>().solveInPlace(w);
    w.normalize();
    const double lam_new = w.dot(c * w);
    const bool done = it > 0 && std::abs(lam_new - lam) <= 1e-10 * std::abs(lam_new);
    lam = lam_new;
    x = w;
    if (done) break;
  }
  return std::sqrt(std::max(lam, 0.0));
}

Householder::Householder(const Vector& z) {
  const double nz = z.norm();
  if (nz == 0.0) throw ZeroVector("Householder: zero vector");
  v_ = z / nz;
  v_[0] += (v_[0] >= 0.0 ? 1.0 : -1.0);
  vtv_ = v_.squaredNorm();
}

Vector Householder::apply(const Vector& x) const {
  return x - (2.0 * v_.dot(x) / vtv_) * v_;
}

Matrix complement_basis(const Vector& z) {
  const Index m = z.size();
  Householder h(z);
  Matrix basis(m, m - 1);
  Vector e = Vector::Zero(m);
  for (Index j = 1; j < m; ++j) {
    e[j] = 1.0;
    basis.col(j - 1) = h.apply(e);
    e[j] = 0.0;
  }
  return basis;
}

}  // namespace trs
