#include "nml/report.hpp"

namespace nml {

namespace {

Json optional_number(const std::optional<double>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json intervals(const std::vector<Interval>& list) {
  Json out = Json::array();
  for (const auto& iv : list) out.push_back(Json::array({iv.start, iv.end}));
  return out;
}

}  // namespace

Json coefficients_report(const MsCoefficients& coeffs, const std::vector<double>& singularities_ms0,
                         const std::optional<std::vector<double>>& singularities_ms1) {
  Json out;
  out["omega0"] = coeffs.omega0;
  out["decay"] = coeffs.decay;
  out["a1_over_a0"] = coeffs.a1_over_a0;
  out["b1_over_b0"] = optional_number(coeffs.b1_over_b0);
  out["c1"] = coeffs.c1;
  out["collapsed_tau"] = coeffs.collapsed_tau;
  out["singularities_ms0"] = singularities_ms0;
  out["singularities_ms1"] = singularities_ms1 ? Json(*singularities_ms1) : Json(nullptr);
  return out;
}

Json diagnostics_report(const MasterEqCoefficients& coeffs, const MarkovianVerdict& verdict,
                        const std::optional<double>& t_hat) {
  Json out;
  out["markovian"] = verdict.markovian;
  out["negative_intervals"] = intervals(verdict.negative_intervals);
  out["singularities"] = coeffs.singularities;
  out["t_hat"] = optional_number(t_hat);
  return out;
}

Json comparison_report(const ComparisonReport& report) {
  Json out;
  out["linf_population"] = report.linf_population;
  out["l2_population"] = report.l2_population;
  out["t_hat_a"] = optional_number(report.t_hat_a);
  out["t_hat_b"] = optional_number(report.t_hat_b);
  out["t_hat_rel_error"] = optional_number(report.t_hat_rel_error);
  out["samples"] = report.samples;
  return out;
}

}  // namespace nml
