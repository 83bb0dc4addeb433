#include "trslab/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace trs {

SymTridiagonal::SymTridiagonal(Vector d, Vector e) : diag(std::move(d)), offdiag(std::move(e)) {
  if (diag.size() < 1 || offdiag.size() != diag.size() - 1)
    throw DimensionMismatch("tridiagonal: offdiag must have length order-1");
}

SymTridiagonal SymTridiagonal::leading(Index k) const {
  if (k < 1 || k > order()) throw DimensionMismatch("tridiagonal: bad leading block size");
  return SymTridiagonal(diag.head(k), offdiag.head(k - 1));
}

Vector SymTridiagonal::multiply(const Vector& x, double shift) const {
  const Index k = order();
  if (x.size() != k) throw DimensionMismatch("tridiagonal multiply: size mismatch");
  Vector y(k);
  for (Index i = 0; i < k; ++i) {
    double s = (diag[i] + shift) * x[i];
    if (i > 0) s += offdiag[i - 1] * x[i - 1];
    if (i + 1 < k) s += offdiag[i] * x[i + 1];
    y[i] = s;
  }
  return y;
}

double SymTridiagonal::inf_norm() const {
  const Index k = order();
  double m = 0.0;
  for (Index i = 0; i < k; ++i) {
    double r = std::abs(diag[i]);
    if (i > 0) r += std::abs(offdiag[i - 1]);
    if (i + 1 < k) r += std::abs(offdiag[i]);
    m = std::max(m, r);
  }
  return m;
}

bool TridiagLdlt::factor(const SymTridiagonal& T, double shift) {
  const Index k = T.order();
  d_.resize(k);
  l_.resize(k > 1 ? k - 1 : 0);
  double scale = 0.0;
  for (Index i = 0; i < k; ++i) scale = std::max(scale, std::abs(T.diag[i] + shift));
  const double tol = 1e-14 * scale;

  pd_ = true;
  min_pivot_ = std::numeric_limits<double>::infinity();
  double prev = 0.0;
  for (Index i = 0; i < k; ++i) {
    double piv = T.diag[i] + shift;
    if (i > 0) piv -= l_[i - 1] * l_[i - 1] * prev;
    min_pivot_ = std::min(min_pivot_, piv);
    if (piv <= tol) {
      pd_ = false;
      return false;
    }
    d_[i] = piv;
    if (i + 1 < k) l_[i] = T.offdiag[i] / piv;
    prev = piv;
  }
  return true;
}

void TridiagLdlt::solve_in_place(Vector& x) const {
  const Index k = d_.size();
  if (!pd_) throw NotPositiveDefinite("tridiagonal solve on non-positive-definite factor");
  if (x.size() != k) throw DimensionMismatch("tridiagonal solve: size mismatch");
  for (Index i = 1; i < k; ++i) x[i] -= l_[i - 1] * x[i - 1];
  for (Index i = 0; i < k; ++i) x[i] /= d_[i];
  for (Index i = k - 2; i >= 0; --i) x[i] -= l_[i] * x[i + 1];
}

Vector tridiag_shift_solve(const SymTridiagonal& T, double shift, const Vector& rhs, int power) {
  if (power < 1) throw Error("tridiag_shift_solve: power must be >= 1");
  TridiagLdlt f;
  if (!f.factor(T, shift))
    throw NotPositiveDefinite("tridiag_shift_solve: shifted matrix is not positive definite");
  Vector x = rhs;
  for (int p = 0; p < power; ++p) {
    const Vector b = x;
    f.solve_in_place(x);
    Vector r = b - T.multiply(x, shift);
    f.solve_in_place(r);
    x += r;
  }
  return x;
}

Index tridiag_count_below(const SymTridiagonal& T, double x) {
  const Index k = T.order();
  double offmax = 0.0;
  for (Index i = 0; i + 1 < k; ++i) offmax = std::max(offmax, std::abs(T.offdiag[i]));
  const double pivmin =
      std::max(offmax * offmax, 1.0) * std::numeric_limits<double>::min() * 64.0;

  Index count = 0;
  double d = T.diag[0] - x;
  if (std::abs(d) < pivmin) d = -pivmin;
  if (d < 0) ++count;
  for (Index i = 1; i < k; ++i) {
    d = (T.diag[i] - x) - T.offdiag[i - 1] * T.offdiag[i - 1] / d;
    if (std::abs(d) < pivmin) d = -pivmin;
    if (d < 0) ++count;
  }
  return count;
}

namespace {

// Bisect for the boundary value theta with exactly `want` eigenvalues below.
double sturm_bisect(const SymTridiagonal& T, double lo, double hi, Index want) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (tridiag_count_below(T, mid) >= want)
      hi = mid;
    else
      lo = mid;
    if (hi - lo <= 0.5e-13 * (1.0 + std::max(std::abs(lo), std::abs(hi)))) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::pair<double, double> tridiag_extreme_eigs(const SymTridiagonal& T) {
  const Index k = T.order();
  if (k == 1) return {T.diag[0], T.diag[0]};
  double lo = T.diag[0], hi = T.diag[0];
  for (Index i = 0; i < k; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(T.offdiag[i - 1]);
    if (i + 1 < k) r += std::abs(T.offdiag[i]);
    lo = std::min(lo, T.diag[i] - r);
    hi = std::max(hi, T.diag[i] + r);
  }
  const double pad = 1e-12 * (1.0 + std::max(std::abs(lo), std::abs(hi)));
  lo -= pad;
  hi += pad;
  const double theta_min = sturm_bisect(T, lo, hi, 1);
  const double theta_max = sturm_bisect(T, lo, hi, k);
  return {theta_min, theta_max};
}

}  // namespace trs
