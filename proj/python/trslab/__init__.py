"""Trust-region subproblem lab: Krylov solver, exact oracle, convergence bounds."""

from ._trslab import (
    Problem,
    TrsError,
    cheb_eval,
    chebyshev_nodes,
    dense_problem,
    diag_problem,
    exact_solve,
    example1,
    example2,
    load_diag_json,
    multiplier_factors,
    residual_poly_derivs_at_zero,
    residual_poly_eval,
    solve,
    trace_bounds,
)

__all__ = [
    "Problem",
    "TrsError",
    "cheb_eval",
    "chebyshev_nodes",
    "dense_problem",
    "diag_problem",
    "exact_solve",
    "example1",
    "example2",
    "load_diag_json",
    "multiplier_factors",
    "residual_poly_derivs_at_zero",
    "residual_poly_eval",
    "solve",
    "trace_bounds",
]
