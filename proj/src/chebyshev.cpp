#include "trslab/chebyshev.hpp"

#include <cmath>

namespace trs {

double cheb_eval(int k, double x) {
  if (k < 0) throw Error("cheb_eval: negative index");
  if (k == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (int j = 1; j < k; ++j) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double ResidualPolySpec::t() const {
  const double rk = std::sqrt(kappa());
  return (rk - 1.0) / (rk + 1.0);
}

namespace {

// P_j(w) = t^j C_j(w) by recurrence; bounded by (t * (w + sqrt(w^2-1)))^j,
// which is <= 1 on the arguments the bounds evaluate (w <= ell). Returns
// (P_m, dP_m/dw, d2P_m/dw2).
struct Triple {
  double p, dp, d2p;
};

Triple scaled_cheb(int m, double t, double w) {
  Triple prev{1.0, 0.0, 0.0};
  if (m == 0) return prev;
  Triple cur{t * w, t, 0.0};
  const double t2 = t * t;
  for (int j = 1; j < m; ++j) {
    Triple next;
    next.p = 2.0 * t * w * cur.p - t2 * prev.p;
    next.dp = 2.0 * t * (cur.p + w * cur.dp) - t2 * prev.dp;
    next.d2p = 2.0 * t * (2.0 * cur.dp + w * cur.d2p) - t2 * prev.d2p;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

double residual_family_eval(int m, double lambda_min, double lambda_max, double x) {
  if (m < 0) throw Error("residual_family_eval: negative index");
  if (!(lambda_min > 0.0) || lambda_max < lambda_min)
    throw InvalidInterval("residual polynomial: need 0 < lambda_min <= lambda_max");
  if (m == 0) return 1.0;
  if (lambda_min == lambda_max)  // kappa = 1 limit
    return std::pow(1.0 - x / lambda_min, m);

  const double kappa = lambda_max / lambda_min;
  const double rk = std::sqrt(kappa);
  const double t = (rk - 1.0) / (rk + 1.0);
  const double ell = (kappa + 1.0) / (kappa - 1.0);
  const double w = ell - 2.0 * x / (lambda_max - lambda_min);
  const double tm = std::pow(t, m);
  return 2.0 * scaled_cheb(m, t, w).p / (1.0 + tm * tm);
}

double residual_poly_eval(const ResidualPolySpec& spec, double x) {
  return residual_family_eval(spec.degree + 1, spec.lambda_min, spec.lambda_max, x);
}

std::pair<double, double> residual_poly_derivs_at_zero(const ResidualPolySpec& spec) {
  if (spec.degree < 1) throw Error("residual_poly_derivs_at_zero: degree must be >= 1");
  if (!(spec.lambda_min > 0.0) || spec.lambda_max < spec.lambda_min)
    throw InvalidInterval("residual polynomial: need 0 < lambda_min <= lambda_max");
  const int m = spec.degree;
  if (spec.lambda_min == spec.lambda_max) {
    const double lam = spec.lambda_min;
    return {-m / lam, m * (m - 1.0) / (lam * lam)};
  }
  const double kappa = spec.kappa();
  const double rk = std::sqrt(kappa);
  const double t = (rk - 1.0) / (rk + 1.0);
  const double ell = (kappa + 1.0) / (kappa - 1.0);
  const double width = spec.lambda_max - spec.lambda_min;
  const Triple c = scaled_cheb(m, t, ell);
  const double tm = std::pow(t, m);
  const double scale = 2.0 / (1.0 + tm * tm);
  // chain rule: dw/dx = -2/width
  const double d1 = scale * c.dp * (-2.0 / width);
  const double d2 = scale * c.d2p * (4.0 / (width * width));
  return {d1, d2};
}

}  // namespace trs
