#include "trslab/problem.hpp"

#include <cmath>

#include "trslab/rng.hpp"

namespace trs {

SymOperator SymOperator::dense(DenseSym a) { return SymOperator{std::move(a)}; }
SymOperator SymOperator::diagonal(Vector d) { return SymOperator{std::move(d)}; }
SymOperator SymOperator::callback(Apply apply, Index n) {
  return SymOperator{Callback{std::move(apply), n}};
}

Index SymOperator::order() const {
  if (is_dense()) return dense_matrix().order();
  if (is_diagonal()) return diagonal_entries().size();
  return std::get<Callback>(rep_).n;
}

Vector SymOperator::apply(const Vector& x) const {
  if (x.size() != order()) throw DimensionMismatch("operator apply: size mismatch");
  if (is_dense()) return dense_matrix().matrix() * x;
  if (is_diagonal()) return diagonal_entries().cwiseProduct(x);
  return std::get<Callback>(rep_).fn(x);
}

TrsProblem::TrsProblem(SymOperator a_, Vector g_, double delta_)
    : a(std::move(a_)), g(std::move(g_)), delta(delta_) {
  if (g.size() != a.order()) throw DimensionMismatch("problem: gradient length != operator order");
  if (g.norm() == 0.0) throw ZeroGradient("problem: gradient must be nonzero");
  if (!(delta > 0.0)) throw Error("problem: radius must be positive");
}

Vector gen_chebyshev_diag(double a, double b, Index n) {
  if (!(a < b)) throw InvalidInterval("chebyshev nodes: need a < b");
  if (n < 1) throw Error("chebyshev nodes: need n >= 1");
  Vector d(n);
  const double half = 0.5 * (b - a);
  const double mid = (a + b) / (b - a);
  for (Index j = 1; j <= n; ++j)
    d[j - 1] = half * (std::cos((2.0 * j - 1.0) * M_PI / (2.0 * n)) + mid);
  return d;
}

TrsProblem gen_example1(double a, double b, Index n, double delta, std::uint64_t seed) {
  Vector d = gen_chebyshev_diag(a, b, n);
  Rng rng(seed);
  Vector g = rng.normal_vector(n);
  g /= g.norm();
  return TrsProblem(SymOperator::diagonal(std::move(d)), std::move(g), delta);
}

namespace {

// Spectrum of the positive block-diagonal operator behind gen_example2.
Vector example2_positive_diag() {
  Vector nodes = gen_chebyshev_diag(1.0, 3000.0, 10000);
  Vector d(10001);
  d.head(10000) = nodes;
  d[10000] = 0.1;
  return d;
}

Vector example2_f(double rho) {
  Vector f = Vector::Constant(10001, rho);
  f[10000] = 1.0;
  return f;
}

}  // namespace

TrsProblem gen_example2(double rho) {
  const Vector dpos = example2_positive_diag();
  const Vector f = example2_f(rho);
  const Vector x_opt = dpos.cwiseProduct(f);
  const double delta = x_opt.norm();
  // Gradient sign chosen so (A + 500 I) x_opt = -g, the stationarity
  // convention used everywhere else in this library.
  Vector g = -dpos.cwiseProduct(x_opt);
  Vector d = dpos.array() - 500.0;
  return TrsProblem(SymOperator::diagonal(std::move(d)), std::move(g), delta);
}

Example2Exact example2_exact(double rho) {
  const Vector dpos = example2_positive_diag();
  const Vector f = example2_f(rho);
  Example2Exact e;
  e.lambda_opt = 500.0;
  e.x_opt = dpos.cwiseProduct(f);
  e.delta = e.x_opt.norm();
  const Vector g = dpos.cwiseProduct(e.x_opt);
  // s = ||A_opt^{-1} x|| ||g|| / (g^T A_opt^{-3} g) with A_opt the positive
  // diagonal; all three factors collapse onto f.
  const double denom = f.dot(dpos.cwiseProduct(f));
  e.s_opt = f.norm() * g.norm() / denom;
  e.kappa = dpos.maxCoeff() / dpos.minCoeff();
  return e;
}

}  // namespace trs
