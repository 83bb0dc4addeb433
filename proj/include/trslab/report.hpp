#pragma once

#include <ostream>

#include "trslab/bounds.hpp"
#include "trslab/solver.hpp"

namespace trs {

/// Per-iteration solver trace. Columns: k, lambda, x_norm, resid, f, beta,
/// boundary, time_ms. Times are emitted only when with_timing is set so
/// that identical runs produce identical bytes.
void write_solve_csv(std::ostream& os, const GltrResult& run, bool with_timing = false);

/// Per-iteration bound report, one column per BoundRow field; NaN fields are
/// written as "na".
void write_bounds_csv(std::ostream& os, const BoundTrace& trace);

/// Problem-level summary as JSON.
void write_summary_json(std::ostream& os, const BoundTrace& trace);

std::string format_sci(double v);

}  // namespace trs
