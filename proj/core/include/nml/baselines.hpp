#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "nml/trajectory.hpp"

namespace nml {

/// Traditional perturbative curves for the Lorentzian reservoir: ordinary
/// differential perturbation (ODP), second-order generalized master equation
/// (GME) and time-convolutionless master equation (TCL).
enum class BaselineMethod { ODP2, ODP6, GME2, TCL2, TCL6 };

std::string_view to_string(BaselineMethod method) noexcept;
std::optional<BaselineMethod> baseline_from_method(Method method) noexcept;
Method to_method(BaselineMethod method) noexcept;

struct BaselineSpec {
  BaselineMethod method;
  double gamma;
  double lambda;
};

/// Dense polynomial, coefficients in ascending powers.
struct Polynomial {
  std::vector<double> coefficients;

  double operator()(double x) const;
  Polynomial derivative() const;
};

/// ODP term C^(n) in the dimensionless time gamma * t, for n in {0, 2, 4, 6}.
Polynomial odp_term(int n);

/// Truncated ODP amplitude sum_n alpha^n C^(n)(gamma t) and its time derivative.
double odp_amplitude(const BaselineSpec& spec, double t);
double odp_amplitude_derivative(const BaselineSpec& spec, double t);
/// Square of the truncated amplitude; never clamped.
double odp_population(const BaselineSpec& spec, double t);

/// e^{-lambda t/2}[cos(D t/2) + (lambda/D) sin(D t/2)], D^2 = 4 gamma lambda - lambda^2,
/// continued to D^2 <= 0. This is a population and may be negative.
double gme2_population(const BaselineSpec& spec, double t);

/// Gamma_T^(2) for TCL2, Gamma_T^(2) + Gamma_T^(4) + Gamma_T^(6) for TCL6.
double tcl_gamma(const BaselineSpec& spec, double t);
/// int_0^t tcl_gamma, in closed form.
double tcl_integrated_gamma(const BaselineSpec& spec, double t);
/// exp(-tcl_integrated_gamma).
double tcl_population(const BaselineSpec& spec, double t);

/// ODP and TCL carry an amplitude (TCL: C = exp(-1/2 int Gamma_T)); GME-2 is
/// population-only.
AmplitudeTrajectory baseline_trajectory(const BaselineSpec& spec, double dt, double t_max);

}  // namespace nml
