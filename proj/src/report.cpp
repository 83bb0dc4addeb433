#include "trslab/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace trs {

namespace {
constexpr const char* kSchemaSolve = "# trs-trace schema 1";
constexpr const char* kSchemaBounds = "# trs-bounds schema 1";
}  // namespace

std::string format_sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12e", v);
  return buf;
}

namespace {
std::string cell(double v) { return std::isnan(v) ? "na" : format_sci(v); }
}  // namespace

void write_solve_csv(std::ostream& os, const GltrResult& run, bool with_timing) {
  os << kSchemaSolve << '\n';
  os << "k,lambda,x_norm,resid,f,beta,boundary,time_ms\n";
  for (const auto& r : run.trace) {
    char tbuf[32];
    std::snprintf(tbuf, sizeof(tbuf), "%.3f", with_timing ? r.wall_time_s * 1e3 : 0.0);
    os << r.k << ',' << format_sci(r.lambda) << ',' << format_sci(r.x_norm) << ','
       << format_sci(r.residual_norm) << ',' << format_sci(r.f_value) << ','
       << format_sci(r.beta) << ',' << (r.boundary ? 1 : 0) << ',' << tbuf << '\n';
  }
}

void write_bounds_csv(std::ostream& os, const BoundTrace& trace) {
  os << kSchemaBounds << '\n';
  os << "k,applicable,lambda_k,beta_k,resid_recurrence,f_k"
        ",eps_act,eps_bound"
        ",fgap_act,fgap_b_classic,fgap_b_proj,fgap_b_rate"
        ",dist_act,dist_b_classic,dist_b_proj,dist_b_rate"
        ",resid_act,resid_b_jia_asym,resid_b_gould,resid_b_proj,resid_b_rate,resid_b_cheb,resid_b_min"
        ",angle_act,angle_b_jia,angle_b_proj"
        ",lamgap_act,lamgap_b_jia_asym,lamgap_b_jia_rel,lamgap_b_rel,lamgap_b_rel_rate,"
        "lamgap_b_rate"
        ",s_k,sin_y_s,sin_y1_kry,sin_y2_kry,shadow_gap,shadow_gap_bound"
        ",kappa_k,kappa_shifted_k,sep_k,c_k,eta_k1,eta_k2,rtilde_norm\n";
  for (const auto& r : trace.rows) {
    os << r.k << ',' << (r.applicable ? 1 : 0) << ',' << cell(r.lambda_k) << ','
       << cell(r.beta_k) << ',' << cell(r.resid_recurrence) << ',' << cell(r.f_k) << ','
       << cell(r.eps_act) << ',' << cell(r.eps_bound) << ',' << cell(r.fgap_act) << ','
       << cell(r.fgap_b_classic) << ',' << cell(r.fgap_b_proj) << ',' << cell(r.fgap_b_rate)
       << ',' << cell(r.dist_act) << ',' << cell(r.dist_b_classic) << ','
       << cell(r.dist_b_proj) << ',' << cell(r.dist_b_rate) << ',' << cell(r.resid_act) << ','
       << cell(r.resid_b_jia_asym) << ',' << cell(r.resid_b_gould) << ',' << cell(r.resid_b_proj)
       << ',' << cell(r.resid_b_rate) << ',' << cell(r.resid_b_cheb) << ',' << cell(r.resid_b_min) << ','
       << cell(r.angle_act) << ',' << cell(r.angle_b_jia) << ',' << cell(r.angle_b_proj)
       << ',' << cell(r.lamgap_act) << ',' << cell(r.lamgap_b_jia_asym) << ','
       << cell(r.lamgap_b_jia_rel) << ',' << cell(r.lamgap_b_rel) << ','
       << cell(r.lamgap_b_rel_rate) << ',' << cell(r.lamgap_b_rate) << ',' << cell(r.s_k)
       << ',' << cell(r.sin_y_s) << ',' << cell(r.sin_y1_kry) << ',' << cell(r.sin_y2_kry)
       << ',' << cell(r.shadow_gap) << ',' << cell(r.shadow_gap_bound) << ','
       << cell(r.kappa_k) << ',' << cell(r.kappa_shifted_k) << ',' << cell(r.sep_k) << ','
       << cell(r.c_k) << ',' << cell(r.eta_k1) << ',' << cell(r.eta_k2) << ','
       << cell(r.rtilde_norm) << '\n';
  }
}

void write_summary_json(std::ostream& os, const BoundTrace& trace) {
  nlohmann::json j;
  auto put = [&j](const char* key, double v) {
    if (std::isnan(v))
      j[key] = nullptr;
    else
      j[key] = v;
  };
  switch (trace.which) {
    case TrsCase::Interior: j["case"] = "interior"; break;
    case TrsCase::EasyBoundary: j["case"] = "boundary"; break;
    case TrsCase::HardCase: j["case"] = "hard"; break;
  }
  put("lambda_opt", trace.lambda_opt);
  put("kappa", trace.kappa);
  put("t", trace.t);
  put("a_opt_norm", trace.a_opt_norm);
  put("delta", trace.delta);
  put("g_norm", trace.g_norm);
  put("f_opt", trace.f_opt);
  put("m_norm", trace.m_norm);
  put("s_opt", trace.s_opt);
  put("cond_opt", trace.cond_opt);
  put("y1_norm", trace.y1_norm);
  put("y2_norm", trace.y2_norm);
  j["k_final"] = trace.k_final;
  j["converged"] = trace.converged;
  os << j.dump(2) << '\n';
}

}  // namespace trs
