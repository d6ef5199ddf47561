#include "nml/volterra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nml/errors.hpp"

namespace nml {

SolverConfig SolverConfig::defaults_for(double gamma) {
  if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
  return SolverConfig{1e-3 / gamma, 20.0 / gamma, false};
}

void SolverConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("dt must be positive");
  if (!(t_max >= dt) || !std::isfinite(t_max)) throw DomainError("t_max must be >= dt");
  if (t_max / dt > 1e8) throw DomainError("t_max / dt exceeds the 1e8 step guard");
}

std::size_t SolverConfig::steps() const {
  return static_cast<std::size_t>(std::round(t_max / dt));
}

namespace {

AmplitudeTrajectory integrate(const ReservoirKernel& kernel, double dt, std::size_t n) {
  std::vector<double> g(n + 1);
  for (std::size_t k = 0; k <= n; ++k) g[k] = kernel(static_cast<double>(k) * dt);

  // Real and imaginary parts in separate arrays.
  std::vector<double> re(n + 1, 0.0), im(n + 1, 0.0);
  std::vector<Complex> rhs(n + 1);
  re[0] = 1.0;
  rhs[0] = 0.0;

  const double bound = 1.0 + 10.0 * kAmplitudeTolerance;
  const double self_weight = 0.5 * dt * g[0];

  for (std::size_t m = 0; m < n; ++m) {
    const std::size_t next = m + 1;
    // Trapezoid weights: 1/2 at j = 0 and at j = next (handled implicitly).
    double acc_re[4] = {0.5 * g[next] * re[0], 0.0, 0.0, 0.0};
    double acc_im[4] = {0.5 * g[next] * im[0], 0.0, 0.0, 0.0};
    const double* gk = g.data() + next;  // gk[-j] == g[next - j]
    std::size_t j = 1;
    for (; j + 3 <= m; j += 4) {
      for (std::size_t u = 0; u < 4; ++u) {
        const double w = *(gk - static_cast<std::ptrdiff_t>(j + u));
        acc_re[u] += w * re[j + u];
        acc_im[u] += w * im[j + u];
      }
    }
    for (; j <= m; ++j) {
      const double w = *(gk - static_cast<std::ptrdiff_t>(j));
      acc_re[0] += w * re[j];
      acc_im[0] += w * im[j];
    }
    const Complex history(-dt * ((acc_re[0] + acc_re[1]) + (acc_re[2] + acc_re[3])),
                          -dt * ((acc_im[0] + acc_im[1]) + (acc_im[2] + acc_im[3])));

    const Complex current(re[m], im[m]);
    const Complex predicted = current + dt * rhs[m];
    const Complex predicted_rhs = history - self_weight * predicted;
    const Complex corrected = current + 0.5 * dt * (rhs[m] + predicted_rhs);

    if (!(std::abs(corrected) <= bound)) {
      throw NumericalInstabilityError(
          "amplitude left the physical bound |C| <= 1 at t = " +
          std::to_string(static_cast<double>(next) * dt) + "; retry with a smaller dt");
    }
    re[next] = corrected.real();
    im[next] = corrected.imag();
    rhs[next] = history - self_weight * corrected;
  }

  AmplitudeTrajectory traj;
  traj.times.resize(n + 1);
  traj.c.resize(n + 1);
  traj.population.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    traj.times[k] = static_cast<double>(k) * dt;
    traj.c[k] = Complex(re[k], im[k]);
    traj.population[k] = std::norm(traj.c[k]);
  }
  traj.c_dot = std::move(rhs);
  traj.method_tag = "exact-numeric";
  traj.params = TrajectoryParams{kernel.kind(), kernel.gamma(), kernel.lambda()};
  return traj;
}

}  // namespace

AmplitudeTrajectory solve_exact(const ReservoirKernel& kernel, const SolverConfig& config) {
  config.validate();
  const std::size_t n = config.steps();
  AmplitudeTrajectory traj = integrate(kernel, config.dt, n);
  if (config.refine_check) {
    const AmplitudeTrajectory fine = integrate(kernel, 0.5 * config.dt, 2 * n);
    double diff = 0.0;
    for (std::size_t k = 0; k <= n; ++k) diff = std::max(diff, std::abs(traj.c[k] - fine.c[2 * k]));
    const double estimate = diff * 4.0 / 3.0;
    traj.error_estimate = estimate;
    if (estimate > kRefineTolerance) {
      throw NumericalInstabilityError("half-step check failed: estimated error " +
                                      std::to_string(estimate) + " exceeds " +
                                      std::to_string(kRefineTolerance));
    }
  }
  return traj;
}

Complex lorentzian_closed_form(double gamma, double lambda, double t) {
  if (!(gamma > 0.0) || !(lambda > 0.0)) throw DomainError("gamma and lambda must be positive");
  if (!(t >= 0.0)) throw DomainError("t must be nonnegative");
  const double d2 = 2.0 * gamma * lambda - lambda * lambda;
  const double half = 0.5 * t;
  if (d2 > 0.0) {
    const double d = std::sqrt(d2);
    return std::exp(-lambda * half) * (std::cos(d * half) + (lambda / d) * std::sin(d * half));
  }
  if (d2 < 0.0) {
    // e^{-lambda t/2} cosh, sinh rewritten to avoid overflow.
    const double k = std::sqrt(-d2);
    const double grow = std::exp((k - lambda) * half);
    const double fall = std::exp(-(k + lambda) * half);
    return 0.5 * (grow + fall) + 0.5 * (lambda / k) * (grow - fall);
  }
  return std::exp(-lambda * half) * (1.0 + lambda * half);
}

Complex lorentzian_closed_form_derivative(double gamma, double lambda, double t) {
  if (!(gamma > 0.0) || !(lambda > 0.0)) throw DomainError("gamma and lambda must be positive");
  if (!(t >= 0.0)) throw DomainError("t must be nonnegative");
  const double d2 = 2.0 * gamma * lambda - lambda * lambda;
  const double half = 0.5 * t;
  if (d2 > 0.0) {
    const double d = std::sqrt(d2);
    return -(gamma * lambda / d) * std::exp(-lambda * half) * std::sin(d * half);
  }
  if (d2 < 0.0) {
    const double k = std::sqrt(-d2);
    const double grow = std::exp((k - lambda) * half);
    const double fall = std::exp(-(k + lambda) * half);
    return -(gamma * lambda / k) * 0.5 * (grow - fall);
  }
  return -0.5 * gamma * lambda * t * std::exp(-lambda * half);
}

AmplitudeTrajectory lorentzian_closed_form_trajectory(double gamma, double lambda, double dt,
                                                      double t_max) {
  return tabulate(
      "closed-form", TrajectoryParams{KernelKind::Lorentzian, gamma, lambda}, dt, t_max,
      [&](double t) { return lorentzian_closed_form(gamma, lambda, t); },
      [&](double t) { return lorentzian_closed_form_derivative(gamma, lambda, t); });
}

}  // namespace nml
