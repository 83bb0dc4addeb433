#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trslab/bounds.hpp"
#include "trslab/chebyshev.hpp"
#include "trslab/problem_io.hpp"

namespace py = pybind11;
using namespace trs;

namespace {

const char* case_name(TrsCase c) {
  switch (c) {
    case TrsCase::Interior: return "interior";
    case TrsCase::EasyBoundary: return "boundary";
    case TrsCase::HardCase: return "hard";
  }
  return "?";
}

py::dict trace_to_dict(const std::vector<IterationRecord>& trace) {
  const py::ssize_t m = static_cast<py::ssize_t>(trace.size());
  Vector k(m), lambda(m), x_norm(m), resid(m), f(m), beta(m), boundary(m);
  for (py::ssize_t i = 0; i < m; ++i) {
    const auto& r = trace[static_cast<size_t>(i)];
    k[i] = double(r.k);
    lambda[i] = r.lambda;
    x_norm[i] = r.x_norm;
    resid[i] = r.residual_norm;
    f[i] = r.f_value;
    beta[i] = r.beta;
    boundary[i] = r.boundary ? 1.0 : 0.0;
  }
  py::dict d;
  d["k"] = k;
  d["lambda"] = lambda;
  d["x_norm"] = x_norm;
  d["resid"] = resid;
  d["f"] = f;
  d["beta"] = beta;
  d["boundary"] = boundary;
  return d;
}

GltrOptions make_opts(double tol, Index k_max, bool reorth, bool keep_reduced) {
  GltrOptions o;
  o.tol_resid = tol;
  o.k_max_cap = k_max;
  o.reorth = reorth;
  o.keep_reduced = keep_reduced;
  return o;
}

py::dict exact_to_dict(const ExactSolution& s) {
  py::dict d;
  d["lambda_opt"] = s.lambda_opt;
  d["x_opt"] = s.x_opt;
  d["case"] = case_name(s.which);
  d["alpha_1"] = s.alpha_1;
  d["alpha_n"] = s.alpha_n;
  d["kappa"] = s.kappa;
  d["a_opt_norm"] = s.a_opt_norm;
  return d;
}

}  // namespace

PYBIND11_MODULE(_trslab, m) {
  m.doc() = "trust-region subproblem lab: GLTR solver, exact oracle, convergence bounds";

  py::register_exception<Error>(m, "TrsError");

  py::class_<TrsProblem>(m, "Problem")
      .def_property_readonly("n", &TrsProblem::order)
      .def_property_readonly("delta", [](const TrsProblem& p) { return p.delta; })
      .def_property_readonly("g", [](const TrsProblem& p) { return p.g; })
      .def_property_readonly(
          "diag",
          [](const TrsProblem& p) -> py::object {
            if (!p.a.is_diagonal()) return py::none();
            return py::cast(p.a.diagonal_entries());
          })
      .def("apply", [](const TrsProblem& p, const Vector& x) { return p.a.apply(x); });

  m.def(
      "diag_problem",
      [](const Vector& d, const Vector& g, double delta) {
        return TrsProblem(SymOperator::diagonal(d), g, delta);
      },
      py::arg("diag"), py::arg("g"), py::arg("delta"));
  m.def(
      "dense_problem",
      [](const Matrix& a, const Vector& g, double delta) {
        return TrsProblem(SymOperator::dense(DenseSym::from_matrix(a)), g, delta);
      },
      py::arg("a"), py::arg("g"), py::arg("delta"));
  m.def("example1", &gen_example1, py::arg("a"), py::arg("b"), py::arg("n"), py::arg("delta"),
        py::arg("seed") = 42);
  m.def("example2", &gen_example2, py::arg("rho"));
  m.def("chebyshev_nodes", &gen_chebyshev_diag, py::arg("a"), py::arg("b"), py::arg("n"));
  m.def(
      "load_diag_json",
      [](const std::string& path) { return load_diag_json(path); }, py::arg("path"));

  m.def(
      "solve",
      [](const TrsProblem& p, double tol, Index k_max, bool reorth) {
        GltrResult r = gltr_solve(p, make_opts(tol, k_max, reorth, false));
        py::dict d;
        d["x"] = r.x;
        d["lambda"] = r.lambda;
        d["converged"] = r.converged;
        d["k_final"] = r.k_final;
        d["trace"] = trace_to_dict(r.trace);
        return d;
      },
      py::arg("problem"), py::arg("tol") = 1e-10, py::arg("k_max") = -1,
      py::arg("reorth") = true,
      "Run the Krylov trust-region solver; returns solution, multiplier and trace.");

  m.def(
      "exact_solve",
      [](const TrsProblem& p) { return exact_to_dict(classify_and_solve(p)); },
      py::arg("problem"), "Exact solution for dense or diagonal operators.");

  m.def(
      "multiplier_factors",
      [](const TrsProblem& p) {
        ExactSolution s = classify_and_solve(p);
        auto [s_opt, cond_opt] = s_and_cond_of_lambda(s, p);
        return py::make_tuple(s_opt, cond_opt);
      },
      py::arg("problem"),
      "(s, cond) controlling how fast the multiplier converges; boundary case only.");

  m.def(
      "trace_bounds",
      [](const TrsProblem& p, double tol, Index k_max, const std::string& sep,
         bool exact_actuals) {
        ExactSolution exact = classify_and_solve(p);
        GltrResult run = gltr_solve(p, make_opts(tol, k_max, true, true));
        BoundsOptions bo;
        bo.exact_actuals = exact_actuals;
        bo.sep = sep == "all"     ? BoundsOptions::SepMode::All
                 : sep == "final" ? BoundsOptions::SepMode::FinalOnly
                                  : BoundsOptions::SepMode::Off;
        BoundTrace tr = evaluate_bounds(p, exact, run, bo);

        const py::ssize_t m_ = static_cast<py::ssize_t>(tr.rows.size());
        py::dict cols;
        auto col = [&](const char* name, auto getter) {
          Vector v(m_);
          for (py::ssize_t i = 0; i < m_; ++i) v[i] = getter(tr.rows[static_cast<size_t>(i)]);
          cols[name] = v;
        };
        col("k", [](const BoundRow& r) { return double(r.k); });
        col("applicable", [](const BoundRow& r) { return r.applicable ? 1.0 : 0.0; });
        col("lambda_k", [](const BoundRow& r) { return r.lambda_k; });
        col("eps_act", [](const BoundRow& r) { return r.eps_act; });
        col("eps_bound", [](const BoundRow& r) { return r.eps_bound; });
        col("fgap_act", [](const BoundRow& r) { return r.fgap_act; });
        col("fgap_b_proj", [](const BoundRow& r) { return r.fgap_b_proj; });
        col("fgap_b_rate", [](const BoundRow& r) { return r.fgap_b_rate; });
        col("dist_act", [](const BoundRow& r) { return r.dist_act; });
        col("dist_b_proj", [](const BoundRow& r) { return r.dist_b_proj; });
        col("dist_b_rate", [](const BoundRow& r) { return r.dist_b_rate; });
        col("resid_act", [](const BoundRow& r) { return r.resid_act; });
        col("resid_b_jia_asym", [](const BoundRow& r) { return r.resid_b_jia_asym; });
        col("resid_b_gould", [](const BoundRow& r) { return r.resid_b_gould; });
        col("resid_b_proj", [](const BoundRow& r) { return r.resid_b_proj; });
        col("resid_b_rate", [](const BoundRow& r) { return r.resid_b_rate; });
        col("resid_b_cheb", [](const BoundRow& r) { return r.resid_b_cheb; });
        col("resid_b_min", [](const BoundRow& r) { return r.resid_b_min; });
        col("angle_act", [](const BoundRow& r) { return r.angle_act; });
        col("angle_b_jia", [](const BoundRow& r) { return r.angle_b_jia; });
        col("angle_b_proj", [](const BoundRow& r) { return r.angle_b_proj; });
        col("lamgap_act", [](const BoundRow& r) { return r.lamgap_act; });
        col("lamgap_b_jia_asym", [](const BoundRow& r) { return r.lamgap_b_jia_asym; });
        col("lamgap_b_jia_rel", [](const BoundRow& r) { return r.lamgap_b_jia_rel; });
        col("lamgap_b_rel", [](const BoundRow& r) { return r.lamgap_b_rel; });
        col("lamgap_b_rel_rate", [](const BoundRow& r) { return r.lamgap_b_rel_rate; });
        col("lamgap_b_rate", [](const BoundRow& r) { return r.lamgap_b_rate; });
        col("s_k", [](const BoundRow& r) { return r.s_k; });
        col("sin_y_s", [](const BoundRow& r) { return r.sin_y_s; });
        col("shadow_gap", [](const BoundRow& r) { return r.shadow_gap; });
        col("shadow_gap_bound", [](const BoundRow& r) { return r.shadow_gap_bound; });
        col("kappa_k", [](const BoundRow& r) { return r.kappa_k; });
        col("sep_k", [](const BoundRow& r) { return r.sep_k; });

        py::dict summary;
        summary["case"] = case_name(tr.which);
        summary["lambda_opt"] = tr.lambda_opt;
        summary["kappa"] = tr.kappa;
        summary["t"] = tr.t;
        summary["delta"] = tr.delta;
        summary["g_norm"] = tr.g_norm;
        summary["m_norm"] = tr.m_norm;
        summary["s_opt"] = tr.s_opt;
        summary["cond_opt"] = tr.cond_opt;
        summary["k_final"] = tr.k_final;
        summary["converged"] = tr.converged;
        return py::make_tuple(cols, summary);
      },
      py::arg("problem"), py::arg("tol") = 1e-10, py::arg("k_max") = -1,
      py::arg("sep") = "off", py::arg("exact_actuals") = true,
      "Solve, run the oracle, and evaluate every a-priori bound per iteration.");

  m.def("cheb_eval", &cheb_eval, py::arg("k"), py::arg("x"));
  m.def(
      "residual_poly_eval",
      [](int degree, double lo, double hi, double x) {
        return residual_poly_eval({degree, lo, hi}, x);
      },
      py::arg("degree"), py::arg("lambda_min"), py::arg("lambda_max"), py::arg("x"));
  m.def(
      "residual_poly_derivs_at_zero",
      [](int degree, double lo, double hi) {
        auto [d1, d2] = residual_poly_derivs_at_zero({degree, lo, hi});
        return py::make_tuple(d1, d2);
      },
      py::arg("degree"), py::arg("lambda_min"), py::arg("lambda_max"));
}
