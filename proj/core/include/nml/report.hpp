#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "nml/diagnostics.hpp"
#include "nml/multiscale.hpp"

namespace nml {

using Json = nlohmann::ordered_json;

/// Keys: omega0, decay, a1_over_a0, b1_over_b0 (null when collapsed), c1,
/// collapsed_tau, singularities_ms0, singularities_ms1 (null when MS1 is undefined).
Json coefficients_report(const MsCoefficients& coeffs, const std::vector<double>& singularities_ms0,
                         const std::optional<std::vector<double>>& singularities_ms1);

/// Keys: markovian, negative_intervals (the verdict's [start, end] pairs), singularities, t_hat.
Json diagnostics_report(const MasterEqCoefficients& coeffs, const MarkovianVerdict& verdict,
                        const std::optional<double>& t_hat);

Json comparison_report(const ComparisonReport& report);

}  // namespace nml
