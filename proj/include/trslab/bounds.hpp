#pragma once

#include <vector>

#include "trslab/oracle.hpp"
#include "trslab/solver.hpp"

namespace trs {

/// One row per GLTR iteration: the measured errors next to every a-priori
/// bound. Fields that do not apply at a step (interior iterate, hard-case
/// problem, sep not computed) hold NaN; `applicable` gates the
/// boundary-conditioned bounds. Naming scheme for bounds:
///   *_b_classic  two-constant bounds driven by the projection error alone
///   *_b_proj     refined bounds driven by the measured projection error
///   *_b_rate     fully a-priori Chebyshev-rate bounds
///   *_b_cheb     reduced-space Chebyshev bound (residual)
///   *_b_jia*     bounds from Jia & Wang's analysis (asym = asymptotic)
///   *_b_gould    Gould et al. residual bound
struct BoundRow {
  Index k = 0;
  bool applicable = false;
  double lambda_k = 0.0, beta_k = 0.0, resid_recurrence = 0.0, f_k = 0.0;

  double eps_act = 0.0, eps_bound = 0.0;

  double fgap_act = 0.0, fgap_b_classic = 0.0, fgap_b_proj = 0.0, fgap_b_rate = 0.0;
  double dist_act = 0.0, dist_b_classic = 0.0, dist_b_proj = 0.0, dist_b_rate = 0.0;

  double resid_act = 0.0, resid_b_jia_asym = 0.0, resid_b_gould = 0.0, resid_b_proj = 0.0,
         resid_b_rate = 0.0, resid_b_cheb = 0.0, resid_b_min = 0.0;

  double angle_act = 0.0, angle_b_jia = 0.0, angle_b_proj = 0.0;

  double lamgap_act = 0.0, lamgap_b_jia_asym = 0.0, lamgap_b_jia_rel = 0.0,
         lamgap_b_rel = 0.0, lamgap_b_rel_rate = 0.0, lamgap_b_rate = 0.0;

  double s_k = 0.0, sin_y_s = 0.0, sin_y1_kry = 0.0, sin_y2_kry = 0.0;
  double shadow_gap = 0.0, shadow_gap_bound = 0.0;
  double kappa_k = 0.0, kappa_shifted_k = 0.0, sep_k = 0.0, c_k = 0.0;
  double eta_k1 = 0.0, eta_k2 = 0.0, rtilde_norm = 0.0;
};

struct BoundsOptions {
  /// Form x_k explicitly each step for the distance/angle actuals. O(n k)
  /// per step; the cheap coefficient-space fallback has a noise floor near
  /// sqrt(eps) * delta once the errors are tiny.
  bool exact_actuals = true;
  enum class SepMode { Off, FinalOnly, All };
  /// Spectral-separation diagnostic (cost grows like k^3 per evaluation).
  SepMode sep = SepMode::Off;
  double sep_applicable_tol = 1e-12;
  int m_norm_max_iters = 500;
  double m_norm_tol = 1e-6;
};

struct BoundTrace {
  std::vector<BoundRow> rows;
  // problem-level quantities
  TrsCase which = TrsCase::Interior;
  double lambda_opt = 0.0, kappa = 0.0, t = 0.0, a_opt_norm = 0.0;
  double delta = 0.0, g_norm = 0.0, f_opt = 0.0;
  double m_norm = 0.0, s_opt = 0.0, cond_opt = 0.0;
  double y1_norm = 0.0, y2_norm = 0.0;
  Index k_final = 0;
  bool converged = false;
};

/// Post-pass over a GLTR run: evaluates every bound against the oracle
/// ground truth, iteration by iteration. The solver itself never depends on
/// anything computed here.
BoundTrace evaluate_bounds(const TrsProblem& problem, const ExactSolution& exact,
                           const GltrResult& run, BoundsOptions opts = {});

/// ||M|| for the 2n x 2n eigenproblem form of the TRS, by power iteration on
/// M^T M applied blockwise; M is never materialized.
double m_norm_estimate(const TrsProblem& problem, int max_iters = 500, double tol = 1e-6);

/// Spectral separation sep(lambda, C_k) = sigma_min(lambda I - C_k), where
/// C_k is the projected block matrix deflated by its rightmost eigenvector.
/// T is the k-step tridiagonal, lambda_k its boundary multiplier.
double sep_estimate(const SymTridiagonal& T, double lambda_k, double g_norm, double delta,
                    double lambda);

}  // namespace trs
