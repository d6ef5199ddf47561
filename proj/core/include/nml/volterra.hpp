#pragma once

#include <cstddef>

#include "nml/kernels.hpp"
#include "nml/trajectory.hpp"

namespace nml {

/// Slack allowed on the physical bound |C| <= 1 by the time stepper.
inline constexpr double kAmplitudeTolerance = 1e-6;
/// Largest Richardson error estimate accepted by a refine check.
inline constexpr double kRefineTolerance = 1e-4;

struct SolverConfig {
  double dt = 1e-3;
  double t_max = 20.0;
  bool refine_check = false;

  /// dt = 1e-3 / gamma, t_max = 20 / gamma.
  static SolverConfig defaults_for(double gamma);

  /// Throws DomainError unless dt > 0, t_max >= dt and t_max / dt <= 1e8.
  void validate() const;
  std::size_t steps() const;
};

/// Integrates  C'(t) = -int_0^t G(t - t') C(t') dt',  C(0) = 1.
///
/// Product-trapezoidal quadrature of the memory integral against the stored
/// samples, with kernel samples G(k dt) cached once, and a Heun
/// predictor-corrector for the local step. O(n^2) in the number of steps,
/// second-order accurate. Throws NumericalInstabilityError if |C| leaves
/// the physical bound, and again if a requested refine check fails.
AmplitudeTrajectory solve_exact(const ReservoirKernel& kernel, const SolverConfig& config);

/// Exact amplitude for the Lorentzian kernel,
///   e^{-lambda t/2} [cos(D t/2) + (lambda/D) sin(D t/2)],  D^2 = 2 gamma lambda - lambda^2,
/// continued to the hyperbolic branch for D^2 < 0 and to the critical limit
/// e^{-lambda t/2}(1 + lambda t/2) at D = 0.
Complex lorentzian_closed_form(double gamma, double lambda, double t);
Complex lorentzian_closed_form_derivative(double gamma, double lambda, double t);

AmplitudeTrajectory lorentzian_closed_form_trajectory(double gamma, double lambda, double dt,
                                                      double t_max);

}  // namespace nml
