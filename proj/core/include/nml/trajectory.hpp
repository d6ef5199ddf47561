#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nml/kernels.hpp"

namespace nml {

using Complex = std::complex<double>;

/// Every curve the library can produce. Spelled in configs as
/// `exact`, `closed-form`, `ms0`, `ms1`, `odp2`, `odp6`, `gme2`, `tcl2`, `tcl6`.
enum class Method { Exact, ClosedForm, MS0, MS1, ODP2, ODP6, GME2, TCL2, TCL6 };

std::string_view to_string(Method method) noexcept;
std::optional<Method> method_from_string(std::string_view name) noexcept;

struct TrajectoryParams {
  std::optional<KernelKind> kind;
  double gamma = 0.0;
  double lambda = 0.0;
};

/// Amplitude C(t) on a uniform grid t_k = k * dt.
///
/// `population` is always filled. `c` and `c_dot` are empty for methods that
/// only define a population (GME-2 can go negative, so no amplitude exists).
struct AmplitudeTrajectory {
  std::vector<double> times;
  std::vector<Complex> c;
  std::vector<Complex> c_dot;
  std::vector<double> population;
  std::string method_tag;
  TrajectoryParams params;
  /// Richardson estimate of max |C| error, when a half-step check ran.
  std::optional<double> error_estimate;

  std::size_t size() const noexcept { return times.size(); }
  bool has_amplitude() const noexcept { return !c.empty(); }
  bool has_derivative() const noexcept { return !c_dot.empty(); }
  double dt() const noexcept { return times.size() > 1 ? times[1] - times[0] : 0.0; }
  double t_max() const noexcept { return times.empty() ? 0.0 : times.back(); }
};

/// Uniform grid with round(t_max / dt) steps.
std::vector<double> uniform_grid(double dt, double t_max);

/// Tabulates an analytic amplitude and its derivative.
template <typename Amplitude, typename Derivative>
AmplitudeTrajectory tabulate(std::string tag, TrajectoryParams params, double dt,
                             double t_max, Amplitude&& amplitude, Derivative&& derivative) {
  AmplitudeTrajectory traj;
  traj.times = uniform_grid(dt, t_max);
  traj.method_tag = std::move(tag);
  traj.params = params;
  traj.c.reserve(traj.times.size());
  traj.c_dot.reserve(traj.times.size());
  traj.population.reserve(traj.times.size());
  for (double t : traj.times) {
    const Complex value = amplitude(t);
    traj.c.push_back(value);
    traj.c_dot.push_back(derivative(t));
    traj.population.push_back(std::norm(value));
  }
  return traj;
}

}  // namespace nml
