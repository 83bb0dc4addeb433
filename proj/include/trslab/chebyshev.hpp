#pragma once

#include <utility>

#include "trslab/types.hpp"

namespace trs {

/// Chebyshev polynomial of the first kind, three-term recurrence.
double cheb_eval(int k, double x);

/// Residual polynomial family attached to an SPD spectrum interval
/// [lambda_min, lambda_max]. Member m of the family is
///   R_m(x) = 2 (t^m + t^-m)^{-1} C_m( ell - 2x/(lambda_max - lambda_min) ),
/// with ell = (kappa+1)/(kappa-1), kappa = lambda_max/lambda_min and
/// t = (sqrt(kappa)-1)/(sqrt(kappa)+1). R_m(0) = 1 and |R_m| <= 2 t^m on the
/// interval, which is the minimax property the convergence bounds lean on.
struct ResidualPolySpec {
  int degree;  // degree of the multiplier polynomial phi; R has index degree+1
  double lambda_min;
  double lambda_max;

  double kappa() const { return lambda_max / lambda_min; }
  double t() const;
};

/// Family member R_m evaluated at x; evaluated through a t-scaled recurrence
/// so no intermediate overflows even for large m.
double residual_family_eval(int m, double lambda_min, double lambda_max, double x);

/// 1 - x phi_k(x) for the multiplier polynomial of degree spec.degree,
/// i.e. the family member of index degree+1.
double residual_poly_eval(const ResidualPolySpec& spec, double x);

/// First and second derivatives at x = 0 of the family member of index
/// spec.degree (the g_k whose derivative sizes the multiplier-convergence
/// constants). Computed by differentiating the recurrence, not by finite
/// differences. Requires degree >= 1.
std::pair<double, double> residual_poly_derivs_at_zero(const ResidualPolySpec& spec);

}  // namespace trs
